#include <stdexcept>

#include "agperf/intersection.hpp"
#include "agperf/series.hpp"
#include "agperf/special_values.hpp"

namespace agperf {

namespace {

Rational formula_III(int g) {
  const Rational lead = Rational(sign_power(g + 1) * (4 * g * g - 8 * g + 7)) * factorial(2 * g - 4) /
                        Rational(12 * (2 * g - 1));
  const Rational second =
      Rational(16).pow(g) * factorial(g - 2) * factorial(g - 1) / Rational(192 * (2 * g - 1));

  const Rational low = Rational(5, 2) - Rational(g);
  Rational inner;
  for (int a = 1; a <= 2 * g - 3; ++a) {
    const Rational shifted = Rational(3, 2) - Rational(g) + Rational(a);
    for (int k = 1; k <= 2 * g - 2 - a; ++k) {
      inner += Rational(sign_power(g + a + k + 1)) * pochhammer(shifted, k) /
               (Rational(k + 1) * factorial(2 * g - a - k - 2) * factorial(a) * pochhammer(low, k));
    }
  }
  return lead + second + factorial(2 * g - 1) * factorial(2 * g - 4) / Rational(12) * inner;
}

/// Shared leading term (2g-2)! / (2^g (g-1)!) a_{g-1}^{(g-1)}.
Rational term_I_lead(int g) {
  return factorial(2 * g - 2) / (Rational(2).pow(g) * factorial(g - 1)) * boundary_first(g - 1);
}

Rational corollary_I(int g) {
  const int order = 2 * g - 1;
  // (1 - e^{-2x}) / (2x) = sum_k (-2x)^k / (k+1)!
  Series todd_denominator(static_cast<size_t>(order + 1));
  for (int k = 0; k <= order; ++k)
    todd_denominator[static_cast<size_t>(k)] = Rational(-2).pow(k) / factorial(k + 1);
  Series todd_scaled = series_inverse(todd_denominator, order);  // 2x / (1 - e^{-2x})
  todd_scaled[0] -= Rational(1);
  todd_scaled[1] -= Rational(1);

  Series exp_quotient(static_cast<size_t>(order + 1));  // (e^x - 1) / x
  for (int k = 0; k <= order; ++k) exp_quotient[static_cast<size_t>(k)] = Rational(1) / factorial(k + 1);

  const Rational coeff = series_multiply(todd_scaled, exp_quotient, order)[static_cast<size_t>(order)];
  return term_I_lead(g) -
         Rational(sign_power(g)) * Rational(2).pow(2 - 2 * g) * factorial(2 * g - 3) * hodge_top(g - 2) * coeff;
}

Rational proposition_I(int g) {
  Rational sum;
  for (int m = 1; m <= g - 1; ++m) {
    sum += Rational(sign_power(m)) * Rational(2).pow(2 * m + 2 - 2 * g) * bernoulli_unsigned(m) /
           (factorial(2 * g - 2 * m - 1) * factorial(2 * m));
  }
  return term_I_lead(g) + Rational(sign_power(g)) * factorial(2 * g - 3) * hodge_top(g - 2) * sum;
}

}  // namespace

ReportedClosedForms reported_closed_forms(int g) {
  if (g < 2) throw std::domain_error("reported_closed_forms: genus must be >= 2");
  return {formula_III(g), corollary_I(g), proposition_I(g)};
}

}  // namespace agperf
