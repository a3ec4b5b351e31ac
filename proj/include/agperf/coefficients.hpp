#pragma once

#include <string_view>

#include "agperf/rational.hpp"

namespace agperf {

/// Gamma(1/2 + n) = r * sqrt(pi) for integer n (negative n allowed).
///
/// The sqrt(pi) factor is never materialized; a quotient of two products with
/// the same number of factors is an exact Rational.
struct HalfIntGamma {
  int n = 0;
  Rational r;

  static HalfIntGamma of(int n);
};

/// Gamma(a1) Gamma(a2) / (Gamma(b1) Gamma(b2)) with the sqrt(pi)^2 cancelled.
Rational gamma_ratio(const HalfIntGamma& a1, const HalfIntGamma& a2, const HalfIntGamma& b1,
                     const HalfIntGamma& b2);

/// Coefficient of [A_{g-2}] in h_*((-2T2 - P)^{a-1} (-2T1 - P)^{b-1} P^{c-1})
/// with a + b + c = 2g - 1, given by its defining finite sum. Zero when
/// a + b > 2g - 1.
Rational c_coeff(int g, int a, int b);

/// Same coefficient from the closed Gamma-quotient form. Requires a + b <= 2g - 1.
Rational c_coeff_gamma(int g, int a, int b);

/// Coefficient of E^n F^m in the inverse dual Todd class of a codimension-2
/// complete intersection, by direct double sum over Todd coefficients.
Rational todd_pair_coeff(int n, int m);

/// Closed form of the same coefficient in terms of Bernoulli numbers.
Rational todd_pair_closed(int n, int m);

enum class BoundaryTerm { I, II, III };

std::string_view to_string(BoundaryTerm which);

/// |Sp(2g, Z/l)|, the degree of the level-l cover as a map of stacks.
Rational level_cover_degree(int g, int l);

/// Number of boundary components of the level-l perfect cone compactification.
Rational level_boundary_components(int g, int l);

/// Multiplicity ratio relating the level-l computation of a boundary term to
/// the computation without level. Independent of l; equals 1/2, 1/8, 1/12.
Rational level_ratio(BoundaryTerm which, int g, int l);

}  // namespace agperf
