#pragma once

#include <complex>
#include <vector>

#include "talbot/evolution.hpp"

namespace talbot {

enum class SingularityKind {
    RightBlowupLeftFinite,  // |S| -> inf from the right, finite from the left
    Removable               // two-sided finite limit
};

struct SingularityReport {
    long long k = 0;            // singular angle index, theta = 2 pi k / q
    double theta = 0.0;
    SingularityKind kind = SingularityKind::Removable;
    std::complex<double> gauss_value;  // G(a, a+k; q)
};

/// One report per candidate angle k in [0, q/2]: a blow-up exactly when
/// 4 does not divide 2(a+k+1)+q. theta = pi is always removable.
std::vector<SingularityReport> singular_points(const RationalTime& rt);

/// Does the initial peak reappear at theta = 2 pi k/q at time 2 pi a/q?
/// Integer arithmetic only; k = q/2 is admitted and always false.
bool talbot_predicate(const RationalTime& rt, long long k);

/// Numerical probe of one blow-up angle: the density |Psi|^2 sin theta is
/// sampled at theta = 2 pi k/q +- offset for each r.
struct BlowupCheck {
    std::vector<double> offsets;  // as given
    std::vector<double> rs;       // ascending
    // value matrices indexed [offset][r]; left is empty for k = 0
    std::vector<std::vector<double>> right;
    std::vector<std::vector<double>> left;
    bool right_increasing_with_r = false;  // strict, at the smallest offset
    bool left_bounded = true;              // left <= 25 x the smallest-r value
};

BlowupCheck verify_blowup_numerically(const RationalTime& rt, long long k,
                                      std::vector<double> offsets,
                                      std::vector<double> rs);

}  // namespace talbot
