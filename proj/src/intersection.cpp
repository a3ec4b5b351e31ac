#include "agperf/intersection.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "agperf/ns_ring.hpp"
#include "agperf/special_values.hpp"

namespace agperf {

namespace {

// Multiplicities of the three boundary contributions (level-cover ratios).
const Rational kWeightI(1, 2);
const Rational kWeightII(1, 8);
const Rational kWeightIII(1, 12);

std::string cell(int g, int N) { return "(g=" + std::to_string(g) + ", N=" + std::to_string(N) + ")"; }

void require_boundary_range(int g, int N, const char* what) {
  if (g < 2) throw OutOfRange(std::string(what) + ": genus must be >= 2");
  const bool ok = (g == 2) ? N == 3 : (N >= 2 * g - 1 && N < 3 * g - 3);
  if (!ok) throw OutOfRange(std::string(what) + ": " + cell(g, N) + " outside 2g-1 <= N < 3g-3");
}

template <typename Poly>
std::vector<Poly> powers_of(const Poly& base, int max_exp) {
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(std::max(max_exp, 0) + 1));
  out.emplace_back(1);
  for (int i = 1; i <= max_exp; ++i) out.push_back(out.back() * base);
  return out;
}

std::vector<YPoly> canonical_powers_of(const YPoly& base, int max_exp) {
  std::vector<YPoly> out;
  out.reserve(static_cast<size_t>(std::max(max_exp, 0) + 1));
  out.emplace_back(1);
  for (int i = 1; i <= max_exp; ++i) out.push_back(y_canonicalize(out.back() * base));
  return out;
}

/// P^e times a polynomial, by shifting exponents.
DeltaPoly times_p_power(const DeltaPoly& poly, int e) {
  if (e == 0) return poly;
  DeltaPoly out;
  for (const auto& [m, c] : poly.terms()) out.add_term({m.t1, m.t2, m.p + e}, c);
  return out;
}

/// a_N^{(g)} for the lower-genus lookups made by term (I); also covers g = 1.
Rational lower_genus_value(int g, int N) {
  if (g == 1) {
    if (N == 0) return hodge_top(1);
    if (N == 1) return boundary_first(1);
    throw OutOfRange("lower_genus_value: " + cell(g, N) + " not available");
  }
  return assemble(g, N).total;
}

}  // namespace

std::string_view to_string(Method method) {
  return method == Method::Engine ? "engine" : "closed-form";
}

long moduli_dimension(int g) { return static_cast<long>(g) * (g + 1) / 2; }

Rational hodge_top(int g) {
  if (g < 0) throw std::domain_error("hodge_top: negative genus");
  const long G = moduli_dimension(g);
  Rational product(1);
  for (int k = 1; k <= g; ++k) product *= zeta_negative_odd(k) / double_factorial_odd(k);
  return Rational(sign_power(G)) * Rational(2).pow(-g) * factorial(static_cast<int>(G)) * product;
}

Rational boundary_first(int g) {
  if (g < 1) throw std::domain_error("boundary_first: genus must be >= 1");
  return Rational(1, 2) * Rational(-2).pow(g - 1) * factorial(g - 1) * hodge_top(g - 1);
}

Rational term_III(int g, int N) {
  require_boundary_range(g, N, "term_III");
  // Restrictions of the three local boundary components to Delta.
  const DeltaPoly first = Rational(-2) * delta::T2() - delta::P();
  const DeltaPoly second = Rational(-2) * delta::T1() - delta::P();
  const auto first_pow = powers_of(first, N - 3);
  const auto second_pow = powers_of(second, N - 3);

  Rational sum;
  for (int a = 1; a <= N - 2; ++a) {
    for (int b = 1; a + b <= N - 1; ++b) {
      const int c = N - a - b;
      const DeltaPoly integrand =
          times_p_power(first_pow[static_cast<size_t>(a - 1)] * second_pow[static_cast<size_t>(b - 1)], c - 1);
      const Rational pushed = h_push(integrand, g);
      if (!pushed.is_zero()) sum += multinomial(N, a, b, c) * pushed;
    }
  }
  return kWeightIII * hodge_top(g - 2) * sum;
}

Rational term_II(int g, int N) {
  require_boundary_range(g, N, "term_II");
  const YPoly first = Rational(-2) * y::xi() - Rational(2) * y::T2() + y::P();
  const YPoly second = Rational(-2) * y::xi() - Rational(2) * y::T1() + y::P();
  const auto first_pow = canonical_powers_of(first, N - 2);
  const auto second_pow = canonical_powers_of(second, N - 2);

  Rational sum;
  for (int a = 1; a <= N - 1; ++a) {
    const int b = N - a;
    const Rational pushed =
        y_pi_push(first_pow[static_cast<size_t>(a - 1)] * second_pow[static_cast<size_t>(b - 1)], g);
    if (!pushed.is_zero()) sum += binomial(N, a) * pushed;
  }
  return kWeightII * hodge_top(g - 2) * sum;
}

Rational term_I(int g, int N, const EngineConfig& config) {
  require_boundary_range(g, N, "term_I");
  // Degree N-1 part of pi_*(e^Theta Td^v(O_Delta)^{-1}) = e^{D/8} on the partial
  // compactification in genus g-1; the Delta-supported corrections are pushed
  // through Delta with E = P, F = -2T2 - P and Theta|_Delta = T1 + P/2.
  const Rational open_part = lower_genus_value(g - 1, N - g) / (Rational(8).pow(N - g) * factorial(N - g));

  const DeltaPoly normal_f = Rational(-2) * delta::T2() - delta::P();
  const auto theta_pow = powers_of(theta_on_delta(), N - 2);
  const auto f_pow = powers_of(normal_f, N - 3);
  const Rational base_hodge = hodge_top(g - 2);

  Rational correction;
  for (int k = 1; k <= N - 1; ++k) {
    for (int n = 1; n <= k - 1; ++n) {
      const Rational coeff = config.todd_pair(n, k - n);
      if (coeff.is_zero()) continue;
      const DeltaPoly integrand = times_p_power(
          theta_pow[static_cast<size_t>(N - 1 - k)] * f_pow[static_cast<size_t>(k - n - 1)], n - 1);
      const Rational pushed = h_push(integrand, g);
      if (pushed.is_zero()) continue;
      // The 1/2 accounts for the generic involution on Delta as a stack.
      correction += coeff / factorial(N - 1 - k) * Rational(1, 2) * pushed * base_hodge;
    }
  }
  return kWeightI * Rational(-2).pow(N - 1) * factorial(N - 1) * (open_part - correction);
}

Rational term_II_closed(int g) {
  if (g < 2) throw std::domain_error("term_II_closed: genus must be >= 2");
  const Rational bracket = Rational(2).pow(4 * g) * factorial(g - 1) * factorial(g - 2) +
                           Rational(32 * sign_power(g)) * factorial(2 * g - 3);
  return -hodge_top(g - 2) / Rational(64 * (2 * g - 1)) * bracket;
}

bool in_assemble_range(int g, int N) {
  if (g < 2 || N < 0) return false;
  return N < 3 * g - 3 || (g == 2 && N == 3);
}

TermBreakdown assemble(int g, int N, const EngineConfig& config) {
  if (!in_assemble_range(g, N))
    throw OutOfRange("assemble: " + cell(g, N) + " outside 0 <= N < 3g-3 (g >= 2, plus g=2, N=3)");

  TermBreakdown out;
  out.g = g;
  out.N = N;
  out.G = moduli_dimension(g);
  out.formal = N >= 3 * g - 3;

  if (N == 0) {
    out.total = hodge_top(g);
  } else if (N < g) {
    out.total = Rational(0);  // L^{G-N} vanishes on beta_1
  } else if (N == g) {
    out.total = boundary_first(g);
  } else if (N <= 2 * g - 2) {
    out.total = Rational(0);  // pi_* Theta^{N-1} = 0 beyond the fibre dimension
  } else {
    ThreeTerms t{term_I(g, N, config), term_II(g, N), term_III(g, N)};
    out.total = t.sum();
    out.terms = std::move(t);
    out.method = Method::Engine;
  }
  return out;
}

}  // namespace agperf
