#pragma once

#include "agperf/rational.hpp"

namespace agperf {

// Combinatorial and number-theoretic constants. Everything here is exact and
// memoized where the value is reused; caches are process-wide and guarded, so
// these functions may be called concurrently.

Rational factorial(int n);

/// (2k-1)!! = 1*3*...*(2k-1), with (-1)!! = 1.
Rational double_factorial_odd(int k);

/// Zero outside 0 <= k <= n.
Rational binomial(int n, int k);

/// n! / (a! b! c!); requires a + b + c == n.
Rational multinomial(int n, int a, int b, int c);

/// Rising factorial z(z+1)...(z+k-1).
Rational pochhammer(const Rational& z, int k);

/// Bernoulli numbers with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0.
Rational bernoulli_modern(int n);

/// The unsigned even-index convention B_k = |B_{2k}| used in the Todd expansion.
Rational bernoulli_unsigned(int k);

/// Coefficients b_n of x / (1 - e^{-x}).
Rational todd_coefficient(int n);

/// zeta(1 - 2k) = -B_{2k} / (2k).
Rational zeta_negative_odd(int k);

}  // namespace agperf
