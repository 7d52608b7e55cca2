#include <doctest.h>

#include <stdexcept>

#include "vtm/rational.hpp"

using vtm::Rational;

TEST_CASE("normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  Rational acc;
  for (int i = 0; i < 16; ++i) acc += Rational(1, 16);
  CHECK(acc == Rational(1));
}

TEST_CASE("comparison") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(5, 2) > Rational(2));
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("16") == Rational(16));
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(!Rational::parse("").has_value());
  CHECK(!Rational::parse("1/0").has_value());
  CHECK(!Rational::parse("1.5").has_value());
  CHECK(!Rational::parse("a/b").has_value());
  CHECK(!Rational::parse("1/").has_value());
  CHECK(Rational(123, 2).str() == "123/2");
}
