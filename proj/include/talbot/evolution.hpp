#pragma once

#include <complex>

namespace talbot {

/// A time t = 2 pi a/q with a/q a reduced fraction in [0, 1/2). The
/// constructor folds any rational num/den for t/(2 pi) modulo 1/2 (the
/// evolution is pi-periodic) and reduces to lowest terms; a = 0 forces
/// q = 1. Irrational times are never converted implicitly -- callers pick
/// an approximant through the diophantine module and construct one here.
class RationalTime {
public:
    RationalTime(long long num, long long den);

    long long a() const { return a_; }
    long long q() const { return q_; }
    double t() const;  // 2 pi a / q

private:
    long long a_;
    long long q_;
};

/// Concentration r in (0,1) plus the series truncation length.
struct WavePacketParams {
    double r;
    int terms;

    WavePacketParams(double r, int terms);

    /// Truncation from the geometric tail bound: the discarded tail of
    /// sum r^l is below 1e-12 (1-r). Never smaller than 64 terms.
    static WavePacketParams auto_truncated(double r);
};

/// Truncated spectral solution
///   Psi(theta,t) = c_r sum_l r^l P_l(cos theta) e^{-i l(l+1) t}.
/// The phase l(l+1)t is reduced mod 2 pi before exponentiation.
std::complex<double> psi_series(double theta, double t, const WavePacketParams& p);

/// Same series at a rational time: the phase -l(l+1) a/q is reduced mod q
/// in integer arithmetic, so large l lose nothing to rounding.
std::complex<double> psi_series(double theta, const RationalTime& rt,
                                const WavePacketParams& p);

/// Closed form at t = 2 pi a/q:
///   Psi = (c_r/q) sum_{-q/2 < n <= q/2} G(-a,-a-n;q) F(r e(n/q), theta).
/// O(q^2) arithmetic, no series truncation.
std::complex<double> psi_rational(double theta, const RationalTime& rt, double r);

/// Residual | e(-l(l+1)a/q) - (1/q) sum_n G(-a,-a-n;q) e(l n/q) | of the
/// finite Fourier expansion underlying psi_rational. Diagnostic; expected
/// <= 1e-10 for every l.
double dft_coefficient_identity_check(const RationalTime& rt, long long l);

/// r -> 1 limit profile S_{a/q}(theta) = sum_n G(-a,-a-n;q) F(e(n/q), theta),
/// summed term by term in polar form. Terms whose Gauss coefficient vanishes
/// (an exact integer test) are dropped, which makes the removable singular
/// angles evaluable; at a blow-up angle 2 pi k/q the right limit is infinite
/// and a pole_error is thrown. The normalization c_r is not included.
std::complex<double> limit_profile(double theta, const RationalTime& rt);

/// |c_r G(-a,-a-n;q) F(r e(n/q), theta)| through the explicit radicand
///   B = (r^2-1)^2/r + 4r(cos^2 theta + cos^2(2 pi n/q))
///       - 4(r^2+1) cos theta cos(2 pi n/q)
/// (so |F| = (r B)^(-1/4)); agrees with the direct complex evaluation.
double summand_magnitude(long long n, const RationalTime& rt, double r, double theta);

}  // namespace talbot
