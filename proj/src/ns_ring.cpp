#include "agperf/ns_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "agperf/special_values.hpp"

namespace agperf {

namespace {

void append_power(std::ostringstream& os, const char* name, int e) {
  if (e == 0) return;
  if (os.tellp() > 0) os << "*";
  os << name;
  if (e > 1) os << "^" << e;
}

void require_genus(int g) {
  if (g < 2) throw std::domain_error("pushforward to A_{g-2} needs g >= 2, got " + std::to_string(g));
}

/// powers[i] = base^i for i <= max_exp.
std::vector<DeltaPoly> power_table(const DeltaPoly& base, int max_exp) {
  std::vector<DeltaPoly> out;
  out.reserve(static_cast<size_t>(max_exp + 1));
  out.emplace_back(1);
  for (int i = 1; i <= max_exp; ++i) out.push_back(out.back() * base);
  return out;
}

}  // namespace

std::string DeltaMonomial::str() const {
  std::ostringstream os;
  append_power(os, "T1", t1);
  append_power(os, "T2", t2);
  append_power(os, "P", p);
  return os.str();
}

std::string YMonomial::str() const {
  std::ostringstream os;
  append_power(os, "xi", xi);
  append_power(os, "T1", t1);
  append_power(os, "T2", t2);
  append_power(os, "P", p);
  return os.str();
}

namespace delta {
DeltaPoly T1() { return DeltaPoly::monomial({1, 0, 0}); }
DeltaPoly T2() { return DeltaPoly::monomial({0, 1, 0}); }
DeltaPoly P() { return DeltaPoly::monomial({0, 0, 1}); }
}  // namespace delta

namespace y {
YPoly xi() { return YPoly::monomial({1, 0, 0, 0}); }
YPoly T1() { return YPoly::monomial({0, 1, 0, 0}); }
YPoly T2() { return YPoly::monomial({0, 0, 1, 0}); }
YPoly P() { return YPoly::monomial({0, 0, 0, 1}); }

YPoly pullback(const DeltaPoly& p) {
  YPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({0, m.t1, m.t2, m.p}, c);
  return out;
}
}  // namespace y

YPoly y_canonicalize(const YPoly& p) {
  YPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.xi <= 1) {
      out.add_term(m, c);
    } else {
      // xi (xi - f^*P) = 0  =>  xi^e = xi (f^*P)^{e-1}
      out.add_term({1, m.t1, m.t2, m.p + m.xi - 1}, c);
    }
  }
  return out;
}

bool is_canonical(const YPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (m.xi > 1) return false;
  return true;
}

DeltaPoly shift_pullback(const DeltaPoly& p, int n) {
  if (n < 1) throw std::domain_error("shift_pullback: n must be >= 1");
  int max_t1 = 0;
  int max_p = 0;
  for (const auto& [m, c] : p.terms()) {
    max_t1 = std::max(max_t1, m.t1);
    max_p = std::max(max_p, m.p);
  }
  const Rational rn(n);
  const auto t1_image = power_table(delta::T1() + rn * rn * delta::T2() + rn * delta::P(), max_t1);
  const auto p_image = power_table(Rational(2 * n) * delta::T2() + delta::P(), max_p);

  DeltaPoly out;
  for (const auto& [m, c] : p.terms()) {
    DeltaPoly term = t1_image[static_cast<size_t>(m.t1)] * p_image[static_cast<size_t>(m.p)];
    term = term * DeltaPoly::monomial({0, m.t2, 0}, c);
    out += term;
  }
  return out;
}

Rational h_push_monomial(const DeltaMonomial& m, int g) {
  require_genus(g);
  if (m.t1 != m.t2 || m.degree() != 2 * g - 4) return Rational(0);
  // m = T1^{g-2-k} T2^{g-2-k} P^{2k}
  const int k = m.p / 2;
  return Rational(sign_power(k)) * factorial(g - 2) * factorial(2 * k) * factorial(g - 2 - k) / factorial(k);
}

Rational h_push(const DeltaPoly& p, int g) {
  require_genus(g);
  Rational total;
  for (const auto& [m, c] : p.terms()) {
    if (m.t1 != m.t2 || m.degree() != 2 * g - 4) continue;
    total += c * h_push_monomial(m, g);
  }
  return total;
}

DeltaPoly f_push(const YPoly& p) {
  if (!is_canonical(p)) throw std::invalid_argument("f_push: input has xi-degree > 1; canonicalize first");
  DeltaPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.xi == 1) out.add_term({m.t1, m.t2, m.p}, c);
  return out;
}

Rational y_pi_push(const YPoly& p, int g) { return h_push(f_push(y_canonicalize(p)), g); }

DeltaPoly theta_on_delta() { return delta::T1() + Rational(1, 2) * delta::P(); }

YPoly theta_on_y() { return y::xi() + y::T1() - Rational(1, 2) * y::P(); }

}  // namespace agperf
