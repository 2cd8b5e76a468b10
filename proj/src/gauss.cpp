#include "talbot/gauss.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace talbot {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long long mod_pos(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

GaussTriple::GaussTriple(long long a_, long long b_, long long q_)
    : a(a_), b(b_), q(q_) {
    if (q < 1) throw std::invalid_argument("GaussTriple: q must be >= 1");
    if (std::gcd(a, q) != 1)
        throw std::invalid_argument("GaussTriple: gcd(a,q) != 1 for a=" +
                                    std::to_string(a) + ", q=" + std::to_string(q));
}

std::complex<double> unit_root(long long num, long long den) {
    num = mod_pos(num, den);
    double angle = kTwoPi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> gauss_sum(const GaussTriple& t) {
    const long long q = t.q;
    const long long a = mod_pos(t.a, q);
    const long long b = mod_pos(t.b, q);
    std::complex<double> sum{0.0, 0.0};
    for (long long n = 0; n < q; ++n) {
        long long m = mod_pos(a * mod_pos(n * n, q) + b * n, q);
        sum += unit_root(m, q);
    }
    return sum;
}

bool gauss_vanishes(const GaussTriple& t) {
    return mod_pos(2 * (t.b + 1) + t.q, 4) == 0;
}

double gauss_modulus_sq(const GaussTriple& t) {
    if (t.q % 2 != 0) return static_cast<double>(t.q);
    long long parity = mod_pos(t.a * (t.q / 2) + t.b, 2);
    return parity == 0 ? 2.0 * static_cast<double>(t.q) : 0.0;
}

long long mod_inverse(long long a, long long q) {
    if (q < 1) throw std::invalid_argument("mod_inverse: q must be >= 1");
    // extended Euclid on (a mod q, q)
    long long r0 = q, r1 = mod_pos(a, q);
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long div = r0 / r1;
        long long r2 = r0 - div * r1;
        long long s2 = s0 - div * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw std::invalid_argument("mod_inverse: " + std::to_string(a) +
                                    " has no inverse mod " + std::to_string(q));
    return mod_pos(s0, q);
}

FourAStar four_a_star(long long a, long long q) {
    if (q % 2 != 0) return {mod_inverse(mod_pos(4 * mod_pos(a, q), q), q), 1};
    // q even forces a odd, hence an odd inverse: a* a = 1 + mq with mq even.
    return {mod_inverse(a, q), 4};
}

std::complex<double> phase_normalized_gauss(const GaussTriple& t) {
    const FourAStar s = four_a_star(t.a, t.q);
    const long long q = t.q;
    const long long b = mod_pos(t.b, q);
    const long long den = q * s.denominator;
    long long num = mod_pos(s.numerator * mod_pos(b * b, den), den);
    return unit_root(num, den) * gauss_sum(t);
}

}  // namespace talbot
