#include "talbot/valleys.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "talbot/errors.hpp"

namespace talbot {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;
}

std::vector<ValleySlice> v0_slices(long long q_max) {
    if (q_max < 4) throw std::invalid_argument("v0_slices: q_max must be >= 4");
    std::vector<ValleySlice> out;
    for (long long q = 4; q <= q_max; q += 4) {
        for (long long a = 1; 2 * a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            out.push_back({RationalTime(a, q), kTwoPi / static_cast<double>(q)});
        }
    }
    std::sort(out.begin(), out.end(), [](const ValleySlice& u, const ValleySlice& v) {
        return u.rt.a() * v.rt.q() < v.rt.a() * u.rt.q();
    });
    return out;
}

std::vector<ZeroHit> scan_zeros(const RationalTime& rt, int n_grid, double rel_tol) {
    if (n_grid < 256) throw std::invalid_argument("scan_zeros: n_grid must be >= 256");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("scan_zeros: rel_tol must be > 0");

    std::vector<double> theta(static_cast<std::size_t>(n_grid));
    std::vector<double> mag(theta.size());
    for (int j = 0; j < n_grid; ++j) {
        theta[static_cast<std::size_t>(j)] = (j + 0.5) * kPi / n_grid;
        double m;
        try {
            m = std::abs(limit_profile(theta[static_cast<std::size_t>(j)], rt));
        } catch (const pole_error&) {
            m = std::numeric_limits<double>::infinity();  // a pole is not a zero
        }
        mag[static_cast<std::size_t>(j)] = m;
    }

    std::vector<double> sorted = mag;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];

    const bool proven_slice = rt.q() % 4 == 0;
    const double proven_end = kTwoPi / static_cast<double>(rt.q());
    std::vector<ZeroHit> hits;
    for (std::size_t j = 0; j < mag.size(); ++j) {
        if (mag[j] < rel_tol * median) {
            ZeroHit hit;
            hit.theta = theta[j];
            hit.label = proven_slice && theta[j] < proven_end ? ZeroLabel::Proven
                                                              : ZeroLabel::Candidate;
            hits.push_back(hit);
        }
    }
    return hits;
}

ShadowMask shadow_mask(const CarpetGrid& grid, double fraction) {
    if (grid.values.empty()) throw std::invalid_argument("shadow_mask: empty grid");
    if (!(fraction > 0.0 && fraction < 1.0))
        throw std::domain_error("shadow_mask: fraction must lie in (0,1)");
    ShadowMask mask;
    mask.nx = grid.nx();
    mask.ny = grid.ny();
    mask.cells.resize(grid.values.size());
    const double cut = fraction * grid.max_value();
    for (std::size_t i = 0; i < grid.values.size(); ++i)
        mask.cells[i] = grid.values[i] < cut ? 1 : 0;
    return mask;
}

void render_pgm(const ShadowMask& mask, const std::filesystem::path& path,
                bool north_up) {
    if (mask.cells.empty()) throw std::invalid_argument("render_pgm: empty mask");
    std::string payload = "P5\n" + std::to_string(mask.nx) + " " +
                          std::to_string(mask.ny) + "\n255\n";
    for (std::size_t row = 0; row < mask.ny; ++row) {
        const std::size_t iy = north_up ? row : mask.ny - 1 - row;
        for (std::size_t ix = 0; ix < mask.nx; ++ix)
            payload.push_back(mask.at(iy, ix) ? '\0' : static_cast<char>(255));
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace talbot
