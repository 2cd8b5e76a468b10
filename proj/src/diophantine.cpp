#include "talbot/diophantine.hpp"

#include <cmath>
#include <stdexcept>

#include "talbot/legendre.hpp"

namespace talbot {

namespace {
// Residual reciprocals beyond this are treated as rational termination.
constexpr double kRationalCutoff = 1e12;
}

std::vector<long long> continued_fraction(double x, int max_terms) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("continued_fraction: x must lie in (0,1)");
    if (max_terms < 1 || max_terms > 40)
        throw std::invalid_argument("continued_fraction: max_terms must be in [1,40]");

    std::vector<long long> out{0};
    double y = x;
    for (int i = 0; i < max_terms; ++i) {
        const double recip = 1.0 / y;
        if (recip > kRationalCutoff) break;
        long long c = static_cast<long long>(std::floor(recip));
        double frac = recip - static_cast<double>(c);
        if (frac > 1.0 - 1e-9) {  // quotient rounded just below an integer
            c += 1;
            frac = 0.0;
        }
        out.push_back(c);
        if (frac <= 0.0) break;
        y = frac;
    }
    return out;
}

std::vector<Convergent> convergents(double x, int n) {
    if (n < 1) throw std::invalid_argument("convergents: n must be >= 1");
    const std::vector<long long> digits = continued_fraction(x, n);

    std::vector<Convergent> out;
    long long p_prev2 = 1, p_prev = 0;  // seeds for [0; c1, c2, ...]
    long long q_prev2 = 0, q_prev = 1;
    for (std::size_t i = 1; i < digits.size(); ++i) {
        const long long c = digits[i];
        const long long p = c * p_prev + p_prev2;
        const long long q = c * q_prev + q_prev2;
        p_prev2 = p_prev; p_prev = p;
        q_prev2 = q_prev; q_prev = q;
        Convergent conv;
        conv.a = p;
        conv.q = q;
        conv.epsilon = static_cast<double>(q) * static_cast<double>(q) *
                       std::fabs(x - static_cast<double>(p) / static_cast<double>(q));
        out.push_back(conv);
    }
    return out;
}

double error_indicator(const Convergent& c, double r, double theta) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("error_indicator: r not in (0,1)");
    if (!(theta > 0.0)) throw std::domain_error("error_indicator: theta must be > 0");
    const double q = static_cast<double>(c.q);
    const double cr = normalization_constant(r);
    const double omr = 1.0 - r;
    const double inner = 1.0 / std::sqrt(q) + std::min(omr * std::sqrt(q), 1.0);
    return c.epsilon * cr * std::fabs(std::log(theta)) * inner / (omr * omr * omr * q * q);
}

}  // namespace talbot
