#include <doctest.h>

#include <random>
#include <stdexcept>

#include "agperf/rational.hpp"

using agperf::BigInt;
using agperf::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 500);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("rational: canonical form and serialization") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(Rational(1, 3).is_integer());
  CHECK(Rational(-2, 6).denominator() == 3);
  CHECK(Rational(-2, 6).numerator() == -1);
}

TEST_CASE("rational: parse round-trips and rejects junk") {
  for (const char* s : {"0", "1", "-1", "3/2", "-203/240", "17594928013/16329600"})
    CHECK(Rational::parse(s).str() == s);
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("rational: division by zero throws") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  Rational x(3);
  CHECK_THROWS_AS(x /= Rational(0), std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(Rational(0).pow(-1)), std::domain_error);
}

TEST_CASE("rational: powers") {
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(7).pow(0) == Rational(1));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(agperf::sign_power(3) == -1);
  CHECK(agperf::sign_power(-3) == -1);
  CHECK(agperf::sign_power(4) == 1);
}

TEST_CASE("rational: ring axioms on random values") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Results stay in lowest terms with a positive denominator.
    const Rational s = a * b + c;
    CHECK(Rational::parse(s.str()) == s);
    CHECK(s.denominator() > 0);
  }
}

TEST_CASE("rational: ordering") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}
