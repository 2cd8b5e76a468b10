#pragma once

#include <complex>

namespace talbot {

/// Argument triple of the generalized quadratic Gauss sum
///   G(a,b;q) = sum_{n=0}^{q-1} e((a n^2 + b n)/q),  e(x) = exp(2 pi i x).
/// Requires q >= 1 and gcd(a,q) = 1; a and b may be any integers (the sum
/// only depends on them mod q).
struct GaussTriple {
    long long a;
    long long b;
    long long q;

    GaussTriple(long long a, long long b, long long q);
};

/// e(num/den): the exponent is reduced mod 1 in integer arithmetic first,
/// so no precision is lost to large angles.
std::complex<double> unit_root(long long num, long long den);

/// Direct O(q) summation of G(a,b;q) in double precision.
std::complex<double> gauss_sum(const GaussTriple& t);

/// Vanishing criterion: G(a,b;q) = 0  iff  4 | 2(b+1)+q.
/// Pure integer arithmetic; never decided by the floating-point sum.
bool gauss_vanishes(const GaussTriple& t);

/// |G(a,b;q)|^2 in closed form: q for odd q; for even q, 2q when
/// a q/2 + b is even and 0 when it is odd.
double gauss_modulus_sq(const GaussTriple& t);

/// Inverse of a modulo q, in [0,q). Throws std::invalid_argument when
/// gcd(a,q) != 1.
long long mod_inverse(long long a, long long q);

/// The parity-independent inverse (4a)* held as an exact rational:
/// an integer for odd q, an odd numerator over 4 for even q. Satisfies
/// q | (4a)*.4a - 1 in both cases.
struct FourAStar {
    long long numerator = 0;
    int denominator = 1;  // 1 (q odd) or 4 (q even)

    double value() const { return static_cast<double>(numerator) / denominator; }
};

FourAStar four_a_star(long long a, long long q);

/// e((4a)* b^2 / q) G(a,b;q). Zero exactly when the sum itself vanishes;
/// otherwise a constant G_{a,q} independent of b. The exponent is reduced
/// mod q (mod 4q for even q) exactly before exponentiation.
std::complex<double> phase_normalized_gauss(const GaussTriple& t);

}  // namespace talbot
