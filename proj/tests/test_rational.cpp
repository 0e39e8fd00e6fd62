#include "doctest.h"
#include "fano/rational.hpp"

using fano::Rational;

TEST_CASE("rational arithmetic is exact and reduced") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK((a + b).den() == 2);
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den() == 2);  // denominator stays positive
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("rational parse and print round out") {
  CHECK(Rational::parse("-1/6") == Rational(-1, 6));
  CHECK(Rational::parse("108") == Rational(108));
  CHECK(Rational(-1, 6).str() == "-1/6");
  CHECK_THROWS_AS(Rational::parse("x"), fano::error);
  CHECK_THROWS_AS(Rational(1, 0), fano::error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), fano::error);
}

TEST_CASE("rational powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-1) == Rational(3, 2));
  CHECK(Rational(7).pow(0) == Rational(1));
}

TEST_CASE("big values do not overflow") {
  Rational big = Rational(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000);
  CHECK(big * Rational(1, 2) * Rational(2) == big);
  CHECK(big > Rational(0));
}
