#include "talbot/singularities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "talbot/gauss.hpp"

namespace talbot {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

// "bounded" for the left side of a blow-up: within this multiple of the
// smallest-r value (left values converge to a finite limit; the ratio is
// loose when the limit is accidentally small).
constexpr double kLeftBoundFactor = 25.0;
}  // namespace

std::vector<SingularityReport> singular_points(const RationalTime& rt) {
    const long long a = rt.a();
    const long long q = rt.q();
    std::vector<SingularityReport> out;
    out.reserve(static_cast<std::size_t>(q / 2 + 1));
    for (long long k = 0; 2 * k <= q; ++k) {
        GaussTriple triple(a, a + k, q);
        SingularityReport rep;
        rep.k = k;
        rep.theta = kTwoPi * static_cast<double>(k) / static_cast<double>(q);
        rep.kind = gauss_vanishes(triple) ? SingularityKind::Removable
                                          : SingularityKind::RightBlowupLeftFinite;
        rep.gauss_value = gauss_sum(triple);
        out.push_back(rep);
    }
    return out;
}

bool talbot_predicate(const RationalTime& rt, long long k) {
    if (k < 0 || 2 * k > rt.q())
        throw std::invalid_argument("talbot_predicate: k outside [0, q/2]");
    return !gauss_vanishes(GaussTriple(rt.a(), rt.a() + k, rt.q()));
}

BlowupCheck verify_blowup_numerically(const RationalTime& rt, long long k,
                                      std::vector<double> offsets,
                                      std::vector<double> rs) {
    if (!talbot_predicate(rt, k))
        throw std::invalid_argument("verify_blowup_numerically: k is not a blow-up");
    if (offsets.empty()) offsets = {0.05, 0.02, 0.01};
    if (rs.empty()) rs = {0.9, 0.95, 0.97};
    std::sort(rs.begin(), rs.end());

    const double theta_star = kTwoPi * static_cast<double>(k) / rt.q();
    BlowupCheck out;
    out.offsets = offsets;
    out.rs = rs;

    auto density = [&](double theta, double r) {
        const double m = std::abs(psi_rational(theta, rt, r));
        return m * m * std::sin(theta);
    };

    double smallest = offsets.front();
    for (double off : offsets) smallest = std::min(smallest, off);

    for (double off : offsets) {
        std::vector<double> row;
        for (double r : rs) row.push_back(density(theta_star + off, r));
        out.right.push_back(row);
        if (theta_star - off > 0.0) {
            std::vector<double> lrow;
            for (double r : rs) lrow.push_back(density(theta_star - off, r));
            out.left.push_back(lrow);
        }
    }

    // strict growth in r at the closest offset (no quantitative rate claim)
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (offsets[i] != smallest) continue;
        bool inc = true;
        for (std::size_t j = 1; j < rs.size(); ++j)
            inc = inc && out.right[i][j] > out.right[i][j - 1];
        out.right_increasing_with_r = inc;
        break;
    }

    out.left_bounded = true;
    for (const auto& lrow : out.left)
        for (double v : lrow)
            if (v > kLeftBoundFactor * lrow.front()) out.left_bounded = false;

    return out;
}

}  // namespace talbot
