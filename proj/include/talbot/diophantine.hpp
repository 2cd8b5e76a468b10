#pragma once

#include <vector>

namespace talbot {

/// Convergent a/q of a continued fraction, with the approximation quality
/// epsilon = q^2 |x - a/q| (< 1 for every convergent; < 1/sqrt(5)
/// infinitely often by Hurwitz).
struct Convergent {
    long long a = 0;
    long long q = 1;
    double epsilon = 0.0;
};

/// Partial quotients [0; c1, c2, ...] of x in (0,1). max_terms counts the
/// quotients after the leading zero and may not exceed 40 (the reliability
/// limit of double precision). Expansion stops early when the residual
/// reciprocal exceeds 1e12 (the input is then treated as rational).
std::vector<long long> continued_fraction(double x, int max_terms);

/// First n convergents of x in (0,1), via the standard recurrence
/// p_k = c_k p_{k-1} + p_{k-2}, q_k = c_k q_{k-1} + q_{k-2}. Rational x
/// yields fewer than n.
std::vector<Convergent> convergents(double x, int n);

/// Heuristic error indicator for replacing an irrational time by the
/// convergent a/q:
///   E = eps c_r |log theta| (q^(-1/2) + min((1-r) sqrt(q), 1)) / ((1-r)^3 q^2)
/// with all implied constants set to 1. An ordering device for choosing q,
/// not a certified bound. theta = 0 is rejected (log singularity).
double error_indicator(const Convergent& c, double r, double theta);

}  // namespace talbot
