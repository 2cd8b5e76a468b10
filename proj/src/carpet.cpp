#include "talbot/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "talbot/legendre.hpp"
#include "talbot/parallel.hpp"

namespace talbot {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

// n_theta * n_t * terms cap for quantum_carpet (about 20x the flagship
// 1024 x 1024 x 1000 grid).
constexpr double kQuantumBudget = 2.0e10;

std::vector<double> centered_axis(int n, double length) {
    std::vector<double> axis(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) axis[static_cast<std::size_t>(i)] = (i + 0.5) * length / n;
    return axis;
}

std::vector<double> inclusive_axis(int n, double lo, double hi) {
    std::vector<double> axis(static_cast<std::size_t>(n));
    if (n == 1) {
        axis[0] = lo;
        return axis;
    }
    for (int i = 0; i < n; ++i)
        axis[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1.0);
    return axis;
}

}  // namespace

double CarpetGrid::max_value() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

CarpetGrid quantum_carpet(double r, int terms, int n_theta, int n_t, int threads) {
    if (n_theta < 1 || n_t < 1)
        throw std::invalid_argument("quantum_carpet: grid dimensions must be positive");
    WavePacketParams params(r, terms);
    if (static_cast<double>(n_theta) * n_t * terms > kQuantumBudget)
        throw std::length_error("quantum_carpet: n_theta * n_t * terms over budget");

    CarpetGrid grid;
    grid.meta.kind = "quantum";
    grid.meta.params = {{"r", r},
                        {"terms", static_cast<double>(terms)},
                        {"n_theta", static_cast<double>(n_theta)},
                        {"n_t", static_cast<double>(n_t)}};
    grid.x_axis = centered_axis(n_t, kPi);
    grid.y_axis = centered_axis(n_theta, kPi);
    grid.values.assign(static_cast<std::size_t>(n_theta) * n_t, 0.0);

    const std::size_t nth = static_cast<std::size_t>(n_theta);
    const std::size_t nt = static_cast<std::size_t>(n_t);
    const std::size_t L = static_cast<std::size_t>(terms);

    // weight[i*L + l] = r^l P_l(cos theta_i); the column pass is then a plain
    // dot product against the per-column phase table.
    std::vector<double> weight(nth * L);
    parallel_for(nth, threads, [&](std::size_t i) {
        const double x = std::cos(grid.y_axis[i]);
        double prev = 1.0, cur = x, rpow = 1.0;
        double* row = &weight[i * L];
        for (std::size_t l = 0; l < L; ++l) {
            double pl;
            if (l == 0) {
                pl = prev;
            } else if (l == 1) {
                pl = cur;
            } else {
                pl = ((2.0 * l - 1.0) * x * cur - (l - 1.0) * prev) / l;
                prev = cur;
                cur = pl;
            }
            row[l] = rpow * pl;
            rpow *= r;
        }
    });

    const double c = normalization_constant(r);
    parallel_for(nt, threads, [&](std::size_t j) {
        const double t = grid.x_axis[j];
        std::vector<double> ph_re(L), ph_im(L);
        for (std::size_t l = 0; l < L; ++l) {
            const double phase =
                std::fmod(static_cast<double>(l) * (l + 1.0) * t, kTwoPi);
            ph_re[l] = std::cos(phase);
            ph_im[l] = -std::sin(phase);
        }
        for (std::size_t i = 0; i < nth; ++i) {
            const double* row = &weight[i * L];
            double re = 0.0, im = 0.0;
            for (std::size_t l = 0; l < L; ++l) {
                re += row[l] * ph_re[l];
                im += row[l] * ph_im[l];
            }
            const double dens = c * c * (re * re + im * im) * std::sin(grid.y_axis[i]);
            grid.values[i * nt + j] = std::sqrt(dens);
        }
    });

    return grid;
}

Curve slice_profile(const RationalTime& rt, double r, int n_theta) {
    if (n_theta < 1) throw std::invalid_argument("slice_profile: n_theta must be positive");
    Curve curve;
    curve.theta = centered_axis(n_theta, kPi);
    curve.density.resize(curve.theta.size());
    for (std::size_t i = 0; i < curve.theta.size(); ++i) {
        const double m = std::abs(psi_rational(curve.theta[i], rt, r));
        curve.density[i] = m * m * std::sin(curve.theta[i]);
    }
    return curve;
}

CarpetGrid optical_carpet(long long inv_lambda, double slit_width, int n_x, int n_y,
                          double x0, double x1, double y0, double y1, int threads) {
    if (inv_lambda < 1) throw std::invalid_argument("optical_carpet: inv_lambda must be >= 1");
    if (!(slit_width > 0.0 && slit_width < 1.0))
        throw std::domain_error("optical_carpet: slit width must lie in (0,1)");
    if (n_x < 1 || n_y < 1)
        throw std::invalid_argument("optical_carpet: grid dimensions must be positive");

    CarpetGrid grid;
    grid.meta.kind = "optical";
    grid.meta.params = {{"inv_lambda", static_cast<double>(inv_lambda)},
                        {"w", slit_width},
                        {"n_x", static_cast<double>(n_x)},
                        {"n_y", static_cast<double>(n_y)},
                        {"x0", x0}, {"x1", x1}, {"y0", y0}, {"y1", y1}};
    grid.x_axis = inclusive_axis(n_x, x0, x1);
    grid.y_axis = inclusive_axis(n_y, y0, y1);
    grid.values.assign(static_cast<std::size_t>(n_x) * n_y, 0.0);

    const long long M = inv_lambda;
    const std::size_t modes = static_cast<std::size_t>(2 * M + 1);
    std::vector<double> amp(modes), sn(modes);
    for (long long n = -M; n <= M; ++n) {
        const std::size_t idx = static_cast<std::size_t>(n + M);
        amp[idx] = n == 0 ? slit_width
                          : std::sin(n * kPi * slit_width) / (n * kPi);
        sn[idx] = std::sqrt(static_cast<double>(M * M - n * n));
    }

    const std::size_t nx = static_cast<std::size_t>(n_x);
    const std::size_t ny = static_cast<std::size_t>(n_y);
    parallel_for(ny, threads, [&](std::size_t iy) {
        const double y = grid.y_axis[iy];
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double x = grid.x_axis[ix];
            double re = 0.0, im = 0.0;
            for (long long n = -M; n <= M; ++n) {
                const std::size_t idx = static_cast<std::size_t>(n + M);
                const double phase =
                    kTwoPi * std::remainder(x * sn[idx] + static_cast<double>(n) * y, 1.0);
                re += amp[idx] * std::cos(phase);
                im += amp[idx] * std::sin(phase);
            }
            grid.values[iy * nx + ix] = re * re + im * im;
        }
    });

    return grid;
}

std::complex<double> paraxial_field(double x, double y, long long inv_lambda,
                                    double spacing, int n_terms) {
    if (inv_lambda < 1) throw std::invalid_argument("paraxial_field: inv_lambda must be >= 1");
    if (!(spacing > 0.0)) throw std::domain_error("paraxial_field: spacing must be > 0");
    if (n_terms < 0) throw std::invalid_argument("paraxial_field: n_terms must be >= 0");
    const double lambda = 1.0 / static_cast<double>(inv_lambda);
    std::complex<double> acc{0.0, 0.0};
    for (long long n = -n_terms; n <= n_terms; ++n) {
        const double dn = spacing * static_cast<double>(n) / lambda;
        const double arg = x / (2.0 * lambda) * dn * dn + static_cast<double>(n) * y / spacing;
        const double phase = kTwoPi * std::remainder(arg, 1.0);
        acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc / spacing;
}

}  // namespace talbot
