#include <doctest.h>

#include "cyclelab/errors.hpp"
#include "cyclelab/rational.hpp"

using namespace cyclelab;

TEST_CASE("parse_rational accepts decimals, fractions and exponents") {
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational("3/10") == Rational(3, 10));
  CHECK(parse_rational("1e-1") == Rational(1, 10));
  CHECK(parse_rational("2.5E1") == Rational(25));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("7") == Rational(7));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParameterRejected);
  CHECK_THROWS_AS(parse_rational("abc"), ParameterRejected);
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterRejected);
  CHECK_THROWS_AS(parse_rational("0.3x"), ParameterRejected);
}

TEST_CASE("ceil and floor on exact rationals") {
  CHECK(ceil_rational(Rational(7, 2)) == 4);
  CHECK(floor_rational(Rational(7, 2)) == 3);
  CHECK(ceil_rational(Rational(4)) == 4);
  CHECK(floor_rational(Rational(4)) == 4);
  CHECK(ceil_rational(Rational(-7, 2)) == -3);
  CHECK(floor_rational(Rational(-7, 2)) == -4);
  CHECK(ceil_rational(Rational(1, 1000000)) == 1);
}

TEST_CASE("at_least compares counts with rationals exactly") {
  CHECK(at_least(3, Rational(3)));
  CHECK_FALSE(at_least(2, Rational(201, 100)));
  CHECK(at_least(3, Rational(201, 100)));
}

TEST_CASE("to_string prints integers bare and fractions as a/b") {
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(to_string(Rational(3, 10)) == "3/10");
  CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25));
}
