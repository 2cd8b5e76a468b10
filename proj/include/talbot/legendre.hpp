#pragma once

#include <complex>

namespace talbot {

/// P_l(x) by the upward three-term recurrence; |x| <= 1 required.
double legendre_eval(unsigned l, double x);

/// F(z,theta) = ((z - cos theta)^2 + sin^2 theta)^(-1/2), the Legendre
/// generating function, with the branch of the square root fixed by
/// arg in (-pi, pi] |-> half the argument (real positive stays real
/// positive). On the unit circle the radicand is factored exactly as
/// 2 z (cos(arg z) - cos theta) so the branch survives the cancellation
/// near the poles z = e^{+-i theta}; landing on a pole throws pole_error.
std::complex<double> generating_function(std::complex<double> z, double theta);

/// Truncated series sum_{l<terms} z^l P_l(cos theta); requires |z| < 1
/// (the boundary is not summed). Truncation tail is bounded by
/// |z|^terms / (1 - |z|).
std::complex<double> generating_series(std::complex<double> z, double theta, int terms);

/// c_r = (2 pi / r log((1+r)/(1-r)))^(-1/2), the constant that normalizes
/// c_r F(r, .) to unit L^2 norm on the sphere. Requires 0 < r < 1.
double normalization_constant(double r);

/// Exact polar form of F(e(n/q), theta): magnitude
/// R = 2^(-1/2) |cos(2 pi n/q) - cos theta|^(-1/2) and phase
///   A = -pi n/q                      for 2 pi |n|/q < theta,
///   A = sgn(n) pi/2 - pi n/q         for theta < 2 pi |n|/q.
/// Requires -q/2 < n <= q/2; theta = 2 pi |n|/q throws pole_error.
struct PolarForm {
    double magnitude = 0.0;  // R >= 0
    double phase = 0.0;      // A in (-pi, pi]

    std::complex<double> value() const {
        return {magnitude * std::cos(phase), magnitude * std::sin(phase)};
    }
};

PolarForm polar_form(long long n, long long q, double theta);

}  // namespace talbot
