#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "agperf/coefficients.hpp"
#include "agperf/series.hpp"
#include "agperf/special_values.hpp"

using namespace agperf;

namespace {

using Grid = std::vector<std::vector<Rational>>;

/// Coefficients of td(E) td(F) (1 - e^{-(E+F)}) / (E+F) up to total degree `order`,
/// built from plain series arithmetic rather than the library's Todd tables.
Grid todd_pair_oracle(int order) {
  // td(x) = 1 / ((1 - e^{-x}) / x), and (1 - e^{-x}) / x = sum (-1)^r x^r / (r+1)!.
  Series k(static_cast<size_t>(order + 1));
  for (int r = 0; r <= order; ++r) k[static_cast<size_t>(r)] = Rational(sign_power(r)) / factorial(r + 1);
  const Series td = series_inverse(k, order);

  Grid out(static_cast<size_t>(order + 1), std::vector<Rational>(static_cast<size_t>(order + 1)));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) {
      const Rational tij = td[static_cast<size_t>(i)] * td[static_cast<size_t>(j)];
      if (tij.is_zero()) continue;
      for (int p = 0; i + j + p <= order; ++p)
        for (int q = 0; i + j + p + q <= order; ++q)
          out[static_cast<size_t>(i + p)][static_cast<size_t>(j + q)] +=
              tij * k[static_cast<size_t>(p + q)] * binomial(p + q, p);
    }
  return out;
}

}  // namespace

TEST_CASE("c_coeff examples") {
  CHECK(c_coeff(2, 1, 1) == Rational(1));
  CHECK(c_coeff(3, 1, 3) == Rational(-2));
  CHECK(c_coeff(3, 2, 2) == Rational(2));
  CHECK(c_coeff(3, 3, 3) == Rational(0));
  CHECK(c_coeff_gamma(2, 1, 2) == Rational(-1));
  CHECK(c_coeff_gamma(3, 2, 2) == Rational(2));
  CHECK(c_coeff_gamma(5, 2, 4) == c_coeff_gamma(5, 4, 2));
  CHECK_THROWS_AS(c_coeff(1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(c_coeff(3, 0, 1), std::domain_error);
  CHECK_THROWS_AS(c_coeff_gamma(3, 3, 3), std::domain_error);
}

TEST_CASE("c_coeff: defining sum equals the Gamma form, symmetric in a and b") {
  for (int g = 2; g <= 25; ++g)
    for (int a = 1; a <= 2 * g - 2; ++a)
      for (int b = 1; a + b <= 2 * g - 1; ++b) {
        const Rational sum = c_coeff(g, a, b);
        CHECK(sum == c_coeff_gamma(g, a, b));
        CHECK(sum == c_coeff(g, b, a));
      }
}

TEST_CASE("half-integer Gamma values") {
  CHECK(HalfIntGamma::of(0).r == Rational(1));        // Gamma(1/2)
  CHECK(HalfIntGamma::of(1).r == Rational(1, 2));     // Gamma(3/2)
  CHECK(HalfIntGamma::of(3).r == Rational(15, 8));    // Gamma(7/2)
  CHECK(HalfIntGamma::of(-1).r == Rational(-2));      // Gamma(-1/2)
  CHECK(HalfIntGamma::of(-2).r == Rational(4, 3));    // Gamma(-3/2)
  for (int n = -10; n <= 10; ++n)  // Gamma(x + 1) = x Gamma(x)
    CHECK(HalfIntGamma::of(n + 1).r == (Rational(n) + Rational(1, 2)) * HalfIntGamma::of(n).r);
}

TEST_CASE("todd pair coefficients") {
  CHECK(todd_pair_coeff(1, 1) == Rational(1, 12));
  CHECK(todd_pair_coeff(2, 0) == Rational(0));
  CHECK(todd_pair_coeff(0, 0) == Rational(1));
  CHECK(todd_pair_closed(1, 1) == Rational(1, 12));
  CHECK(todd_pair_closed(1, 3) == Rational(-1, 720));
  CHECK(todd_pair_closed(1, 2) == Rational(0));
  CHECK_THROWS_AS(todd_pair_coeff(-1, 0), std::domain_error);
  CHECK_THROWS_AS(todd_pair_closed(0, -1), std::domain_error);

  const int order = 60;
  const Grid oracle = todd_pair_oracle(order);
  for (int n = 0; n <= order; ++n)
    for (int m = 0; n + m <= order; ++m) {
      const Rational want = oracle[static_cast<size_t>(n)][static_cast<size_t>(m)];
      CHECK(todd_pair_coeff(n, m) == want);
      CHECK(todd_pair_closed(n, m) == want);
    }
}

TEST_CASE("level covers") {
  CHECK(level_cover_degree(1, 3) == Rational(24));      // |SL(2, F_3)|
  CHECK(level_cover_degree(2, 3) == Rational(51840));   // |Sp(4, F_3)|
  CHECK(level_ratio(BoundaryTerm::I, 5, 3) == Rational(1, 2));
  CHECK(level_ratio(BoundaryTerm::II, 4, 5) == Rational(1, 8));
  CHECK(level_ratio(BoundaryTerm::III, 6, 7) == Rational(1, 12));
  for (int g = 2; g <= 8; ++g)
    for (int l : {3, 5, 7, 11}) {
      CHECK(level_ratio(BoundaryTerm::I, g, l) == Rational(1, 2));
      if (g >= 3) {
        CHECK(level_ratio(BoundaryTerm::II, g, l) == Rational(1, 8));
        CHECK(level_ratio(BoundaryTerm::III, g, l) == Rational(1, 12));
      }
    }
  CHECK_THROWS_AS(level_ratio(BoundaryTerm::I, 4, 2), std::domain_error);
  CHECK_THROWS_AS(level_ratio(BoundaryTerm::I, 4, 9), std::domain_error);
  CHECK_THROWS_AS(level_ratio(BoundaryTerm::II, 2, 3), std::domain_error);
  CHECK(to_string(BoundaryTerm::III) == "III");
}
