#pragma once

#include <compare>
#include <string>

#include "agperf/polynomial.hpp"
#include "agperf/rational.hpp"

namespace agperf {

/// Exponents of T1^t1 T2^t2 P^p on Delta (the corank-2 locus fibred over A_{g-2}).
struct DeltaMonomial {
  int t1 = 0;
  int t2 = 0;
  int p = 0;

  [[nodiscard]] int degree() const { return t1 + t2 + p; }
  [[nodiscard]] std::string str() const;
  friend DeltaMonomial operator+(const DeltaMonomial& a, const DeltaMonomial& b) {
    return {a.t1 + b.t1, a.t2 + b.t2, a.p + b.p};
  }
  friend auto operator<=>(const DeltaMonomial&, const DeltaMonomial&) = default;
};

/// Exponents of xi^xi (f^*T1)^t1 (f^*T2)^t2 (f^*P)^p on the P^1-bundle Y over Delta.
struct YMonomial {
  int xi = 0;
  int t1 = 0;
  int t2 = 0;
  int p = 0;

  [[nodiscard]] int degree() const { return xi + t1 + t2 + p; }
  [[nodiscard]] std::string str() const;
  friend YMonomial operator+(const YMonomial& a, const YMonomial& b) {
    return {a.xi + b.xi, a.t1 + b.t1, a.t2 + b.t2, a.p + b.p};
  }
  friend auto operator<=>(const YMonomial&, const YMonomial&) = default;
};

/// Polynomials in T1, T2, P. The Hodge class is deliberately not a generator:
/// it is paired in as a scalar once everything has been pushed to A_{g-2}.
using DeltaPoly = Polynomial<DeltaMonomial>;

/// Polynomials in xi, f^*T1, f^*T2, f^*P. Plain multiplication does not apply
/// the relation xi^2 = xi f^*P; use y_canonicalize for that.
using YPoly = Polynomial<YMonomial>;

namespace delta {
DeltaPoly T1();
DeltaPoly T2();
DeltaPoly P();
}  // namespace delta

namespace y {
YPoly xi();
YPoly T1();
YPoly T2();
YPoly P();
/// f^*: embeds a class on Delta into Y.
YPoly pullback(const DeltaPoly& p);
}  // namespace y

/// Reduces every monomial to xi-degree <= 1 using xi^e = xi (f^*P)^{e-1}.
YPoly y_canonicalize(const YPoly& p);

[[nodiscard]] bool is_canonical(const YPoly& p);

/// Pullback along the n-th power of the shift automorphism s(z, b) = (z + b, b):
/// T1 -> T1 + n^2 T2 + n P,  T2 -> T2,  P -> 2n T2 + P.
DeltaPoly shift_pullback(const DeltaPoly& p, int n);

/// h_* of a single monomial, as a multiple of [A_{g-2}].
Rational h_push_monomial(const DeltaMonomial& m, int g);

/// h_*: Delta -> A_{g-2}. Nonzero only on T1^l T2^l P^{2k} with 2l + 2k = 2g - 4.
Rational h_push(const DeltaPoly& p, int g);

/// f_*: Y -> Delta. Kills xi-free monomials; xi f^*m maps to m.
/// Throws std::invalid_argument on non-canonical input.
DeltaPoly f_push(const YPoly& p);

/// pi_* = h_* o f_* on Y, canonicalizing first.
Rational y_pi_push(const YPoly& p, int g);

/// Symmetric theta divisor restricted to the zero section: T1 + P/2.
DeltaPoly theta_on_delta();

/// Symmetric theta divisor pulled back to Y: xi + f^*T1 - f^*P/2.
YPoly theta_on_y();

}  // namespace agperf
