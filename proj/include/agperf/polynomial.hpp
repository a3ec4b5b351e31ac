#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "agperf/rational.hpp"

namespace agperf {

/// Sparse commutative polynomial with exact coefficients.
///
/// `Monomial` is an exponent tuple supporting `operator+` (multiplication of
/// monomials), a total order, `degree()` and `str()`. Zero coefficients are
/// never stored.
template <typename Monomial>
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    add_term(Monomial{}, constant);
  }
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(const Monomial& m, const Rational& coeff = Rational(1)) {
    Polynomial p;
    p.add_term(m, coeff);
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] size_t size() const { return terms_.size(); }

  [[nodiscard]] Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  [[nodiscard]] Polynomial pow(int exponent) const {
    if (exponent < 0) throw std::domain_error("Polynomial::pow: negative exponent");
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
      if (exponent & 1) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      const std::string mono = m.str();
      if (mono.empty()) {
        os << c;
      } else if (c == Rational(1)) {
        os << mono;
      } else {
        os << "(" << c << ")*" << mono;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  Terms terms_;
};

}  // namespace agperf
