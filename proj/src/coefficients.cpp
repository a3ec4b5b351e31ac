#include "agperf/coefficients.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "agperf/special_values.hpp"

namespace agperf {

namespace {

void require_c_domain(int g, int a, int b) {
  if (g < 2 || a < 1 || b < 1)
    throw std::domain_error("C_g^{a,b} needs g >= 2 and a, b >= 1 (got g=" + std::to_string(g) +
                            ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

HalfIntGamma HalfIntGamma::of(int n) {
  if (n >= 0) return {n, double_factorial_odd(n) / Rational(2).pow(n)};
  const int m = -n;
  return {n, Rational(-2).pow(m) / double_factorial_odd(m)};
}

Rational gamma_ratio(const HalfIntGamma& a1, const HalfIntGamma& a2, const HalfIntGamma& b1,
                     const HalfIntGamma& b2) {
  // Half-integer arguments are never poles, so no denominator can vanish.
  return a1.r * a2.r / (b1.r * b2.r);
}

Rational c_coeff(int g, int a, int b) {
  require_c_domain(g, a, b);
  if (a + b > 2 * g - 1) return Rational(0);
  Rational sum;
  const int top = std::min(a - 1, b - 1);
  for (int i = 0; i <= top; ++i) {
    // i <= g-2 always holds here since 2i <= a+b-2 <= 2g-3.
    sum += Rational(-4).pow(i) * factorial(a - 1) * factorial(b - 1) * factorial(2 * g - 4 - 2 * i) /
           (factorial(i) * factorial(a - 1 - i) * factorial(b - 1 - i) * factorial(g - 2 - i));
  }
  return Rational(sign_power(a + b + g)) * factorial(g - 2) * sum;
}

Rational c_coeff_gamma(int g, int a, int b) {
  require_c_domain(g, a, b);
  if (a + b > 2 * g - 1) throw std::domain_error("c_coeff_gamma: requires a + b <= 2g - 1");
  // Arguments 5/2-g, 1/2+a+b-g, 3/2+a-g, 3/2+b-g written as 1/2 + n.
  const Rational ratio = gamma_ratio(HalfIntGamma::of(2 - g), HalfIntGamma::of(a + b - g),
                                     HalfIntGamma::of(1 + a - g), HalfIntGamma::of(1 + b - g));
  return Rational(sign_power(a + b + g)) * factorial(2 * g - 4) * ratio;
}

Rational todd_pair_coeff(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("todd_pair_coeff: negative index");
  Rational sum;
  for (int i = 0; i <= n; ++i) {
    const Rational bi = todd_coefficient(i);
    if (bi.is_zero()) continue;
    for (int j = 0; j <= m; ++j) {
      const Rational bj = todd_coefficient(j);
      if (bj.is_zero()) continue;
      const int rest = n + m - i - j;
      sum += Rational(sign_power(rest)) * bi * bj /
             (Rational(rest + 1) * factorial(n - i) * factorial(m - j));
    }
  }
  return sum;
}

Rational todd_pair_closed(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("todd_pair_closed: negative index");
  if (n == 0 && m == 0) return Rational(1);
  if ((n + m) % 2 != 0 || n == 0 || m == 0) return Rational(0);
  const int half_diff = (n - m) / 2;  // may be negative; only its parity matters
  return Rational(sign_power(half_diff)) * bernoulli_unsigned((n + m) / 2) / factorial(n + m);
}

std::string_view to_string(BoundaryTerm which) {
  switch (which) {
    case BoundaryTerm::I: return "I";
    case BoundaryTerm::II: return "II";
    case BoundaryTerm::III: return "III";
  }
  return "?";
}

Rational level_cover_degree(int g, int l) {
  // l^{g(2g+1)} prod_{i=1}^g (1 - l^{-2i})
  const Rational rl(l);
  Rational result = rl.pow(static_cast<long>(g) * (2 * g + 1));
  for (int i = 1; i <= g; ++i) result *= Rational(1) - rl.pow(-2 * i);
  return result;
}

Rational level_boundary_components(int g, int l) {
  const Rational rl(l);
  return Rational(1, 2) * rl.pow(2 * g) * (Rational(1) - rl.pow(-2 * g));
}

Rational level_ratio(BoundaryTerm which, int g, int l) {
  if (l < 3 || !is_prime(l)) throw std::domain_error("level_ratio: level must be a prime >= 3");
  const int min_genus = which == BoundaryTerm::I ? 2 : 3;
  if (g < min_genus)
    throw std::domain_error("level_ratio: term " + std::string(to_string(which)) + " needs g >= " +
                            std::to_string(min_genus));

  const Rational rl(l);
  const Rational nu_g = level_cover_degree(g, l);
  const Rational d_g = level_boundary_components(g, l);

  switch (which) {
    case BoundaryTerm::I: {
      const Rational e = level_cover_degree(g - 1, l) * rl.pow(2 * g - 2);
      return rl * d_g * e / nu_g;
    }
    case BoundaryTerm::II:
    case BoundaryTerm::III: {
      const Rational d_prev = level_boundary_components(g - 1, l);
      const Rational e_II = rl * level_cover_degree(g - 2, l) * rl.pow(4 * (g - 2));
      if (which == BoundaryTerm::II) {
        const Rational d_II = rl / Rational(2) * d_g * d_prev;
        return rl.pow(2) * d_II * e_II / nu_g;
      }
      const Rational d_III = rl / Rational(3) * d_g * d_prev;
      const Rational e_III = e_II / rl;
      return rl.pow(3) * d_III * e_III / nu_g;
    }
  }
  throw std::logic_error("level_ratio: unknown term");
}

}  // namespace agperf
