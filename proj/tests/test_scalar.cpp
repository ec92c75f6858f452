#include "pplateau/scalar.hpp"

#include <doctest.h>

#include <cmath>

using namespace pplateau;

TEST_SUITE("scalar") {
  TEST_CASE("parse exact forms") {
    CHECK(Scalar::parse("7")->identical(Scalar(7)));
    CHECK(Scalar::parse("-3/6")->identical(Scalar(Rational(-1, 2))));
    CHECK(Scalar::parse("1.25")->identical(Scalar(Rational(5, 4))));
    CHECK(Scalar::parse("3e-2")->identical(Scalar(Rational(3, 100))));
    CHECK(Scalar::parse("-0.5")->identical(Scalar(Rational(-1, 2))));
    CHECK(Scalar::parse("007")->identical(Scalar(7)));
    CHECK(Scalar::parse("2.5E1")->identical(Scalar(25)));
  }

  TEST_CASE("parse floating and malformed") {
    auto x = Scalar::parse("~0.1");
    REQUIRE(x);
    CHECK_FALSE(x->exact());
    CHECK(x->to_double() == 0.1);
    CHECK_FALSE(Scalar::parse(""));
    CHECK_FALSE(Scalar::parse("abc"));
    CHECK_FALSE(Scalar::parse("1/0"));
    CHECK_FALSE(Scalar::parse("1//2"));
    CHECK_FALSE(Scalar::parse("1.2.3"));
  }

  TEST_CASE("str round trip") {
    for (const char* s : {"0", "5", "-12", "3/7", "-22/9"}) CHECK(Scalar::parse(s)->str() == s);
    const Scalar pi = Scalar::inexact(M_PI);
    CHECK(Scalar::parse(pi.str())->identical(pi));
  }

  TEST_CASE("exact arithmetic stays exact") {
    Scalar a(Rational(1, 3)), b(Rational(1, 6));
    CHECK((a + b).identical(Scalar(Rational(1, 2))));
    CHECK((a * b).identical(Scalar(Rational(1, 18))));
    CHECK((a / b).identical(Scalar(2)));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a / Scalar(0), DomainError);
  }

  TEST_CASE("inexact operands contaminate") {
    const Scalar x = Scalar(1) + Scalar::inexact(0.5);
    CHECK_FALSE(x.exact());
    CHECK(x == Scalar(Rational(3, 2)));
    CHECK(Scalar::inexact(1.0) == Scalar::inexact(1.0 + 1e-12));
    CHECK(Scalar::inexact(1.0) != Scalar::inexact(1.0 + 1e-6));
    CHECK(Scalar(Rational(1, 3)) != Scalar(Rational(333333333, 1000000000)));
  }

  TEST_CASE("sqrt exact on perfect squares") {
    CHECK(sqrt(Scalar(Rational(9, 4))).identical(Scalar(Rational(3, 2))));
    const Scalar r2 = sqrt(Scalar(2));
    CHECK_FALSE(r2.exact());
    CHECK(r2.to_double() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(sqrt(Scalar(-1)), DomainError);
  }

  TEST_CASE("sign, abs, min, max") {
    CHECK(Scalar(-3).sign() == -1);
    CHECK(Scalar(0).sign() == 0);
    CHECK(abs(Scalar(Rational(-2, 3))).identical(Scalar(Rational(2, 3))));
    CHECK(min(Scalar(1), Scalar(2)).identical(Scalar(1)));
    CHECK(max(Scalar(1), Scalar(2)).identical(Scalar(2)));
  }
}
