#include "talbot/evolution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "talbot/errors.hpp"
#include "talbot/gauss.hpp"
#include "talbot/legendre.hpp"

namespace talbot {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

long long mod_pos(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

void check_theta(double theta) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw std::domain_error("theta must lie in [0, pi]");
}

void check_r(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("r must lie in (0,1)");
}

}  // namespace

RationalTime::RationalTime(long long num, long long den) {
    if (den < 1) throw std::invalid_argument("RationalTime: denominator must be >= 1");
    // fold num/den mod 1/2:  num/den - k/2 = (2 num mod den) / (2 den)
    long long m = mod_pos(2 * num, den);
    long long d = 2 * den;
    long long g = std::gcd(m, d);  // gcd(0, d) = d, so a = 0 forces q = 1
    a_ = m / g;
    q_ = d / g;
}

double RationalTime::t() const {
    return kTwoPi * static_cast<double>(a_) / static_cast<double>(q_);
}

WavePacketParams::WavePacketParams(double r_, int terms_) : r(r_), terms(terms_) {
    check_r(r);
    if (terms < 1) throw std::invalid_argument("WavePacketParams: terms must be >= 1");
}

WavePacketParams WavePacketParams::auto_truncated(double r) {
    check_r(r);
    double need = std::ceil(std::log(1e-12 * (1.0 - r)) / std::log(r));
    if (need > 1e7)
        throw std::domain_error("auto_truncated: r too close to 1 for series evaluation");
    int terms = need < 64.0 ? 64 : static_cast<int>(need);
    return WavePacketParams(r, terms);
}

std::complex<double> psi_series(double theta, double t, const WavePacketParams& p) {
    check_theta(theta);
    const double x = std::cos(theta);
    const double c = normalization_constant(p.r);
    std::complex<double> acc{0.0, 0.0};
    double prev = 1.0;  // P_0
    double cur = x;     // P_1
    double rpow = 1.0;
    for (int l = 0; l < p.terms; ++l) {
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
        const double phase = std::fmod(static_cast<double>(l) * (l + 1.0) * t, kTwoPi);
        acc += rpow * pl * std::complex<double>(std::cos(phase), -std::sin(phase));
        rpow *= p.r;
    }
    return c * acc;
}

std::complex<double> psi_series(double theta, const RationalTime& rt,
                                const WavePacketParams& p) {
    check_theta(theta);
    const long long q = rt.q();
    const long long a = rt.a();
    const double x = std::cos(theta);
    const double c = normalization_constant(p.r);
    std::complex<double> acc{0.0, 0.0};
    double prev = 1.0;
    double cur = x;
    double rpow = 1.0;
    for (long long l = 0; l < p.terms; ++l) {
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
        // e(-l(l+1) a / q), exponent reduced mod q in integers
        long long m = mod_pos(mod_pos(l % q * ((l + 1) % q), q) * (a % q), q);
        acc += rpow * pl * unit_root(-m, q);
        rpow *= p.r;
    }
    return c * acc;
}

std::complex<double> psi_rational(double theta, const RationalTime& rt, double r) {
    check_theta(theta);
    check_r(r);
    const long long q = rt.q();
    const long long a = rt.a();
    const double c = normalization_constant(r);
    std::complex<double> acc{0.0, 0.0};
    for (long long n = -((q - 1) / 2); n <= q / 2; ++n) {
        const std::complex<double> g = gauss_sum(GaussTriple(-a, -a - n, q));
        acc += g * generating_function(r * unit_root(n, q), theta);
    }
    return c / static_cast<double>(q) * acc;
}

double dft_coefficient_identity_check(const RationalTime& rt, long long l) {
    if (l < 0) throw std::invalid_argument("dft check: l must be >= 0");
    const long long q = rt.q();
    const long long a = rt.a();
    long long m = mod_pos(mod_pos(l % q * ((l + 1) % q), q) * (a % q), q);
    const std::complex<double> lhs = unit_root(-m, q);
    std::complex<double> rhs{0.0, 0.0};
    for (long long n = 0; n < q; ++n) {
        rhs += gauss_sum(GaussTriple(-a, -a - n, q)) * unit_root(l % q * n, q);
    }
    rhs /= static_cast<double>(q);
    return std::abs(lhs - rhs);
}

std::complex<double> limit_profile(double theta, const RationalTime& rt) {
    check_theta(theta);
    const long long q = rt.q();
    const long long a = rt.a();

    // Exactly-singular abscissa: a blow-up has no finite value to the right,
    // while a vanishing Gauss coefficient removes the pair entirely (the
    // skip below realizes the left-regularized value).
    const long long k = std::llround(theta * q / kTwoPi);
    if (2 * k <= q && std::fabs(theta - kTwoPi * static_cast<double>(k) / q) <= 1e-12) {
        if (!gauss_vanishes(GaussTriple(a, a + k, q)))
            throw pole_error("limit_profile: blow-up at theta = 2 pi k / q");
    }

    std::complex<double> acc{0.0, 0.0};
    for (long long n = -((q - 1) / 2); n <= q / 2; ++n) {
        const GaussTriple triple(-a, -a - n, q);
        if (gauss_vanishes(triple)) continue;  // exact zero coefficient
        acc += gauss_sum(triple) * polar_form(n, q, theta).value();
    }
    return acc;
}

double summand_magnitude(long long n, const RationalTime& rt, double r, double theta) {
    check_theta(theta);
    check_r(r);
    const long long q = rt.q();
    if (!(2 * n > -q && 2 * n <= q))
        throw std::invalid_argument("summand_magnitude: n outside (-q/2, q/2]");
    const double cphi = std::cos(kTwoPi * static_cast<double>(std::llabs(n)) / q);
    const double cth = std::cos(theta);
    const double bracket = (r * r - 1.0) * (r * r - 1.0) / r +
                           4.0 * r * (cth * cth + cphi * cphi) -
                           4.0 * (r * r + 1.0) * cth * cphi;
    if (!(bracket >= 0.0))
        throw std::logic_error("summand_magnitude: negative radicand");
    const double g = std::abs(gauss_sum(GaussTriple(-rt.a(), -rt.a() - n, q)));
    const double logf = std::log((1.0 + r) / (1.0 - r));
    // |F| = (r B)^(-1/4) since |w|^2 = r B for the radicand w of F
    return g / std::sqrt(kTwoPi / r * logf) / std::pow(r * bracket, 0.25);
}

}  // namespace talbot
