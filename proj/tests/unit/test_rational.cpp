#include <doctest.h>

#include "hullprob/error.hpp"
#include "hullprob/rational.hpp"
#include "hullprob/sqrt_sum.hpp"

using namespace hullprob;

TEST_SUITE("rational") {
  TEST_CASE("lowest terms and parsing") {
    const Rational r = Rational::parse("-6/4");
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.fraction_str() == "-3/2");
    CHECK(Rational::parse("7").fraction_str() == "7/1");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse(" 3/9 ") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("6/-4"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
  }

  TEST_CASE("exact arithmetic, no overflow") {
    Rational big = pow(Rational(10), 40);
    CHECK((big + Rational(1)) - big == Rational(1));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3) < Rational(1, 2));
  }

  TEST_CASE("integer square roots") {
    CHECK(ceil_sqrt(Rational(25)) == 5);
    CHECK(ceil_sqrt(Rational(26)) == 6);
    CHECK(floor_sqrt(Rational(26)) == 5);
    CHECK(ceil_sqrt(Rational(1, 4)) == 1);
    CHECK(is_rational_square(Rational(9, 4)));
    CHECK_FALSE(is_rational_square(Rational(2)));
  }

  TEST_CASE("decimal rendering") {
    CHECK(to_decimal(Rational(5, 16)) == "0.3125");
    CHECK(to_decimal(Rational(1)) == "1");
    CHECK(to_decimal(Rational(0)) == "0");
    CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
    CHECK(to_decimal(Rational(-1, 16)) == "-0.0625");
  }
}

TEST_SUITE("sqrt_sum") {
  TEST_CASE("perfect squares collapse to rationals") {
    CHECK(SqrtSum::sqrt_of(Rational(25)).is_rational());
    CHECK(SqrtSum::sqrt_of(Rational(9, 4)) == SqrtSum(Rational(3, 2)));
    CHECK(SqrtSum::sqrt_of(Rational(8)) == SqrtSum::sqrt_of(Rational(2)) * Rational(2));
  }

  TEST_CASE("certified signs") {
    const SqrtSum s2 = SqrtSum::sqrt_of(Rational(2));
    const SqrtSum s3 = SqrtSum::sqrt_of(Rational(3));
    const SqrtSum s5 = SqrtSum::sqrt_of(Rational(5));
    CHECK((s2 + s3 - s5).sign() > 0);
    CHECK((s2 * Rational(3) - SqrtSum::sqrt_of(Rational(18))).sign() == 0);
    CHECK((SqrtSum(Rational(3, 2)) - s2).sign() > 0);
    // sqrt(10) + sqrt(11) vs sqrt(42): differ by about 2e-3
    CHECK((SqrtSum::sqrt_of(Rational(10)) + SqrtSum::sqrt_of(Rational(11)) -
           SqrtSum::sqrt_of(Rational(42))).sign() < 0);
  }

  TEST_CASE("near-cancellation is decided") {
    // sqrt(n+1) - sqrt(n) vs 1/(2 sqrt(n)) for n = 10^12; differs at ~1e-19
    const Rational n = pow(Rational(10), 12);
    const SqrtSum lhs = SqrtSum::sqrt_of(n + Rational(1)) - SqrtSum::sqrt_of(n);
    const SqrtSum rhs = SqrtSum::sqrt_of(Rational(1) / (Rational(4) * n));
    CHECK((lhs - rhs).sign() < 0);
  }

  TEST_CASE("enclosure brackets the value") {
    const SqrtSum s = SqrtSum::sqrt_of(Rational(2));
    const Enclosure e = enclose(s);
    CHECK(e.lo <= 1.4142135623730951);
    CHECK(e.hi >= 1.4142135623730950);
    CHECK(s.floor() == 1);
  }
}
