#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace agperf {

using BigInt = mpz_class;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Values are always kept in canonical form: the denominator is positive and
/// coprime to the numerator. There is no floating-point conversion on purpose;
/// the only external representation is the decimal string "p/q" (or "p" when
/// q = 1) produced by str() and accepted by parse().
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}           // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}          // NOLINT(google-explicit-constructor)
  Rational(long long value) : value_(BigInt(std::to_string(value))) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "-p", "p/q" or "-p/q" in base 10. Throws std::invalid_argument
  /// on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  /// Integer power; negative exponents invert (throws on 0^-k).
  [[nodiscard]] Rational pow(long exponent) const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (-1)^k as a small integer.
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace agperf
