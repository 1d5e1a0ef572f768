#include <doctest.h>

#include <sstream>

#include "lcs/rational.hpp"

using namespace lcs;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(BigInt(3), BigInt(6)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(2), BigInt(-4)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational(BigInt(2), BigInt(-4)).den() == 2);
  CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
  CHECK(Rational(BigInt(0), BigInt(-7)).num() == 0);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("arithmetic stays exact at large size") {
  // denominators compound in extension constructions; no overflow allowed
  Rational x(BigInt(1), BigInt(3));
  Rational acc(0);
  for (int i = 0; i < 200; ++i) acc = acc * x + Rational(1);
  Rational back = acc;
  for (int i = 0; i < 200; ++i) back = (back - Rational(1)) / x;
  CHECK(back == Rational(0));
  BigInt big = BigInt(1) << 300;
  CHECK(Rational(big, BigInt(3)) * Rational(3) == Rational(big));
}

TEST_CASE("string format p/q with q omitted when 1") {
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(BigInt(-1), BigInt(2)).str() == "-1/2");
  CHECK(Rational::from_string("7/21") == Rational(BigInt(1), BigInt(3)));
  CHECK(Rational::from_string("-4/8") == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational::from_string("12") == Rational(12));
  CHECK_THROWS_AS(Rational::from_string(""), Error);
  CHECK_THROWS_AS(Rational::from_string("1/"), Error);
  CHECK_THROWS_AS(Rational::from_string("a/2"), Error);
  CHECK_THROWS_AS(Rational::from_string("1.5"), Error);
  std::ostringstream os;
  os << Rational(BigInt(22), BigInt(-33));
  CHECK(os.str() == "-2/3");
}

TEST_CASE("ordering and pow") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-1) < Rational(BigInt(-1), BigInt(2)));
  CHECK(pow(Rational(BigInt(2), BigInt(3)), 3) == Rational(BigInt(8), BigInt(27)));
  CHECK(pow(Rational(2), -2) == Rational(BigInt(1), BigInt(4)));
  CHECK(pow(Rational(7), 0) == Rational(1));
}
