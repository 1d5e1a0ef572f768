#include <doctest.h>

#include <random>

#include "lcs/catalog.hpp"
#include "lcs/notation.hpp"

using namespace lcs;

TEST_CASE("parsing structure notation") {
  LieAlgebra g1 = parse_structure_notation("(0,0,0,12)");
  CHECK(g1.dim == 4);
  RatVector c = g1.basis_bracket(1, 2);
  CHECK(c(3) == Rational(-1));  // [e1, e2] = -e4 under the sign convention

  LieAlgebra l622 = parse_structure_notation("(0,0,12,13,14+23,25-34)");
  CHECK(l622.dim == 6);
  CHECK(l622.basis_bracket(2, 5)(5) == Rational(-1));
  CHECK(l622.basis_bracket(3, 4)(5) == Rational(1));

  LieAlgebra d41 = parse_structure_notation("(12+34,0,-23,0)");
  CHECK(d41.basis_bracket(1, 2)(0) == Rational(-1));
  CHECK(d41.basis_bracket(2, 3)(2) == Rational(1));

  // whitespace is tolerated
  CHECK(parse_structure_notation("( 0 , 0 , 12 )").dim == 3);
}

TEST_CASE("parse errors carry positions; Jacobi is still enforced") {
  CHECK_THROWS_AS(parse_structure_notation(""), ParseError);
  CHECK_THROWS_AS(parse_structure_notation("(0,0"), ParseError);
  CHECK_THROWS_AS(parse_structure_notation("(0,0,21)"), ParseError);   // pair not ascending
  CHECK_THROWS_AS(parse_structure_notation("(0,0,102)"), ParseError);  // 0 digit
  CHECK_THROWS_AS(parse_structure_notation("(0,13)"), Error);          // index 3 > dim 2
  CHECK_THROWS_AS(parse_structure_notation("(0,0,12)x"), ParseError);
  // (12,0) is the affine algebra [e1,e2] = -e1: fine in dimension 2
  CHECK_NOTHROW(parse_structure_notation("(12,0)"));
  // (0,0,12,34): Jacobi fails on (1,2,4) since [[e1,e2],e4] = [-e3,e4] = e4
  CHECK_THROWS_AS(parse_structure_notation("(0,0,12,34)"), JacobiViolation);
  try {
    parse_structure_notation("(0,0,,12)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);
  }
}

TEST_CASE("round trip through the canonical printer on catalog algebras") {
  for (const CatalogEntry& e : load_catalog()) {
    if (e.algebra.dim > 9 || e.algebra.dim == 0) continue;
    std::string printed = print_structure_notation(e.algebra);
    LieAlgebra back = parse_structure_notation(printed);
    CHECK(back.brackets == e.algebra.brackets);
    CHECK(print_structure_notation(back) == printed);
  }
  // specific canonical spellings survive
  for (const char* s : {"(0,0,0,12)", "(0,0,12,13)", "(12+34,0,-23,0)",
                        "(0,0,12,13,14+23,25-34)", "(0,0,-12,-13,-14+23,25-34)"}) {
    CHECK(print_structure_notation(parse_structure_notation(s)) == s);
  }
}

TEST_CASE("parsing form expressions") {
  LieAlgebra d41 = parse_structure_notation("(12+34,0,-23,0)");
  KForm phi = parse_form_expr("2*e12+e34", d41);
  CHECK(phi.degree == 2);
  CHECK(phi.coeff({1, 2}) == Rational(2));
  CHECK(phi.coeff({3, 4}) == Rational(1));

  KForm e3 = parse_form_expr("e3", d41);
  CHECK(e3.degree == 1);

  CHECK(parse_form_expr("e12-e12", d41).is_zero());
  CHECK(parse_form_expr("1/2*e12+1/2*e12", d41) == parse_form_expr("e12", d41));
  CHECK(parse_form_expr("-e12", d41).coeff({1, 2}) == Rational(-1));

  CHECK_THROWS_AS(parse_form_expr("e12+e3", d41), Error);      // mixed degree
  CHECK_THROWS_AS(parse_form_expr("e21", d41), ParseError);    // not ascending
  CHECK_THROWS_AS(parse_form_expr("e15", d41), Error);         // out of range
  CHECK_THROWS_AS(parse_form_expr("2e12", d41), ParseError);   // missing '*'
  CHECK_THROWS_AS(parse_form_expr("", d41), ParseError);
  CHECK_THROWS_AS(parse_form_expr("e12+", d41), ParseError);
}

TEST_CASE("parsers never crash on arbitrary byte strings") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<int> byte(32, 126);
  const std::string charset = "(),0123456789+-*/e ";
  std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
  for (int iter = 0; iter < 4000; ++iter) {
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      s += (iter % 2 == 0) ? static_cast<char>(byte(rng)) : charset[pick(rng)];
    try {
      parse_structure_notation(s);
    } catch (const Error&) {
    }
    try {
      parse_form_expr(s, 6);
    } catch (const Error&) {
    }
  }
}
