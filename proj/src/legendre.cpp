#include "talbot/legendre.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "talbot/errors.hpp"

namespace talbot {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

// |z| is treated as on the unit circle within this tolerance of |z|^2.
constexpr double kBoundaryTol = 4e-12;

// cos(arg z) - cos(theta) closer to zero than this counts as a pole.
constexpr double kPoleTol = 1e-14;

void check_theta(double theta) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw std::domain_error("theta must lie in [0, pi]");
}

}  // namespace

double legendre_eval(unsigned l, double x) {
    if (!(std::fabs(x) <= 1.0)) throw std::domain_error("legendre_eval: |x| > 1");
    if (l == 0) return 1.0;
    double prev = 1.0;   // P_0
    double cur = x;      // P_1
    for (unsigned k = 2; k <= l; ++k) {
        double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::complex<double> generating_function(std::complex<double> z, double theta) {
    check_theta(theta);
    const double n2 = std::norm(z);
    if (n2 > 1.0 + kBoundaryTol)
        throw std::domain_error("generating_function: |z| > 1");

    if (n2 >= 1.0 - kBoundaryTol) {
        // Unit circle: radicand factored exactly as 2 e^{i alpha}(cos alpha - cos theta).
        const double alpha = std::atan2(z.imag(), z.real());
        const double diff = z.real() - std::cos(theta);
        if (std::fabs(diff) <= kPoleTol)
            throw pole_error("generating_function: pole at theta = |arg z|");
        double arg;
        if (diff > 0.0) {
            arg = alpha;
        } else if (alpha > 0.0) {
            arg = alpha - kPi;
        } else if (alpha < 0.0) {
            arg = alpha + kPi;
        } else {
            arg = kPi;  // negative real radicand sits on the (-pi, pi] branch edge
        }
        const double mag = 1.0 / std::sqrt(2.0 * std::fabs(diff));
        return {mag * std::cos(-0.5 * arg), mag * std::sin(-0.5 * arg)};
    }

    // Interior: the radicand cannot reach the branch cut (-inf, 0] when
    // |z| < 1, so the principal square root realizes the stated branch.
    const std::complex<double> w = (z - std::cos(theta)) * (z - std::cos(theta)) +
                                   std::sin(theta) * std::sin(theta);
    return 1.0 / std::sqrt(w);
}

std::complex<double> generating_series(std::complex<double> z, double theta, int terms) {
    check_theta(theta);
    if (terms < 1) throw std::invalid_argument("generating_series: terms must be >= 1");
    if (!(std::norm(z) < 1.0))
        throw std::domain_error("generating_series: series requires |z| < 1");
    const double x = std::cos(theta);
    std::complex<double> acc{1.0, 0.0};  // l = 0 term
    std::complex<double> zpow{1.0, 0.0};
    double prev = 1.0;
    double cur = x;
    for (int l = 1; l < terms; ++l) {
        zpow *= z;
        acc += zpow * cur;
        double next = ((2.0 * l + 1.0) * x * cur - static_cast<double>(l) * prev) /
                      (l + 1.0);
        prev = cur;
        cur = next;
    }
    return acc;
}

double normalization_constant(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("normalization_constant: r must lie in (0,1)");
    return 1.0 / std::sqrt(kTwoPi / r * std::log((1.0 + r) / (1.0 - r)));
}

PolarForm polar_form(long long n, long long q, double theta) {
    if (q < 1) throw std::invalid_argument("polar_form: q must be >= 1");
    if (!(2 * n > -q && 2 * n <= q))
        throw std::invalid_argument("polar_form: n outside (-q/2, q/2]");
    check_theta(theta);

    const double phi = kTwoPi * static_cast<double>(std::llabs(n)) /
                       static_cast<double>(q);  // 2 pi |n| / q
    const double diff = std::cos(phi) - std::cos(theta);
    if (std::fabs(diff) <= kPoleTol)
        throw pole_error("polar_form: pole at theta = 2 pi |n| / q");

    PolarForm out;
    out.magnitude = 1.0 / std::sqrt(2.0 * std::fabs(diff));
    const double base = -kPi * static_cast<double>(n) / static_cast<double>(q);
    if (diff > 0.0) {
        out.phase = base;                            // 2 pi |n|/q < theta
    } else {
        out.phase = (n > 0 ? 0.5 * kPi : -0.5 * kPi) + base;  // theta < 2 pi |n|/q
    }
    return out;
}

}  // namespace talbot
