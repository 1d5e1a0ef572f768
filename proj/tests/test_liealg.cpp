#include <doctest.h>

#include <random>

#include "lcs/catalog.hpp"
#include "lcs/liealg.hpp"
#include "lcs/notation.hpp"
#include "lcs/structures.hpp"

using namespace lcs;

namespace {

KForm random_form(std::mt19937_64& rng, int dim, int degree) {
  KForm f(dim, degree);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (const FormIndex& idx : monomial_basis(dim, degree)) {
    int c = dist(rng);
    if (c != 0) f.add_term(idx, Rational(c));
  }
  return f;
}

std::vector<LieAlgebra> catalog_algebras() {
  std::vector<LieAlgebra> out;
  for (const CatalogEntry& e : load_catalog()) out.push_back(e.algebra);
  return out;
}

}  // namespace

TEST_CASE("make_algebra validates the Jacobi identity") {
  // g1 = (0,0,0,12): [e1,e2] = -e4
  BracketMap br;
  RatVector c = zero_vector(4);
  c(3) = Rational(-1);
  br.emplace(std::make_pair(1, 2), c);
  CHECK_NOTHROW(make_algebra(4, br));
  CHECK_NOTHROW(make_algebra(5, {}));  // abelian

  // [e1,e2] = e3, [e1,e3] = e1 violates Jacobi on (1,2,3):
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 + 0 + [-e1, e2] = -e3
  BracketMap bad;
  RatVector c3 = zero_vector(3);
  c3(2) = Rational(1);
  bad.emplace(std::make_pair(1, 2), c3);
  RatVector c1 = zero_vector(3);
  c1(0) = Rational(1);
  bad.emplace(std::make_pair(1, 3), c1);
  CHECK_THROWS_AS(make_algebra(3, bad), JacobiViolation);
}

TEST_CASE("the Chevalley-Eilenberg differential on basis covectors") {
  LieAlgebra g1 = parse_structure_notation("(0,0,0,12)");
  KForm de4 = ce_differential(g1, basis_covector(4, 4));
  CHECK(de4 == parse_form_expr("e12", g1));
  for (int i = 1; i <= 3; ++i)
    CHECK(ce_differential(g1, basis_covector(4, i)).is_zero());

  LieAlgebra ab = make_abelian(3);
  CHECK(ce_differential(ab, parse_form_expr("e12+2*e13", ab)).is_zero());

  // the dimension-6 coframe algebra: d eta = alpha ^ delta - beta ^ gamma
  LieAlgebra l622 = parse_structure_notation("(0,0,-12,-13,-14+23,25-34)");
  CHECK(ce_differential(l622, basis_covector(6, 6)) == parse_form_expr("e25-e34", l622));
}

TEST_CASE("wedge products") {
  int n = 4;
  KForm e1 = basis_covector(n, 1), e2 = basis_covector(n, 2);
  KForm e12 = wedge(e1, e2);
  CHECK(e12 == parse_form_expr("e12", n));
  CHECK(wedge(e12, e12).is_zero());
  KForm f = parse_form_expr("e12-e34", n);
  KForm sq = wedge(f, f);
  KForm expected(n, 4);
  expected.add_term({1, 2, 3, 4}, Rational(-2));
  CHECK(sq == expected);
  // graded commutativity in odd degrees: a ^ b = -b ^ a for 1-forms
  CHECK(wedge(e1, e2) == -wedge(e2, e1));
}

TEST_CASE("wedge is associative and graded-commutative on random forms") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 4 + static_cast<int>(rng() % 3);
    int p = 1 + static_cast<int>(rng() % 2);
    int q = 1 + static_cast<int>(rng() % 2);
    int r = 1 + static_cast<int>(rng() % 2);
    KForm a = random_form(rng, n, p);
    KForm b = random_form(rng, n, q);
    KForm c = random_form(rng, n, r);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    KForm ab = wedge(a, b), ba = wedge(b, a);
    if (p * q % 2 == 0)
      CHECK(ab == ba);
    else
      CHECK(ab == -ba);
  }
}

TEST_CASE("interior product") {
  int n = 4;
  KForm e12 = parse_form_expr("e12", n);
  CHECK(interior(basis_vector(n, 0), e12) == basis_covector(n, 2));
  CHECK(interior(basis_vector(n, 2), e12).is_zero());
  CHECK_THROWS_AS(interior(basis_vector(n, 0), KForm(n, 0)), Error);
  // i_V Phi = omega for the Lee vector of g1's certificate
  LieAlgebra g1 = parse_structure_notation("(0,0,0,12)");
  auto res = verify_lcs_first_kind(g1, parse_form_expr("e3", g1), parse_form_expr("e4", g1));
  REQUIRE(res.ok());
  CHECK(interior(res.structure->lee, res.structure->phi) == res.structure->omega);
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 4 + static_cast<int>(rng() % 2);
    int p = 1 + static_cast<int>(rng() % 2);
    int q = 1 + static_cast<int>(rng() % 2);
    KForm a = random_form(rng, n, p);
    KForm b = random_form(rng, n, q);
    RatVector v = zero_vector(n);
    for (int i = 0; i < n; ++i) v(i) = Rational(static_cast<int>(rng() % 5) - 2);
    KForm lhs = interior(v, wedge(a, b));
    KForm rhs = wedge(interior(v, a), b) +
                (p % 2 == 0 ? wedge(a, interior(v, b)) : -wedge(a, interior(v, b)));
    CHECK(lhs == rhs);
    CHECK(interior(v, interior(v, wedge(a, b))).is_zero());
  }
}

TEST_CASE("Lie derivative: Cartan formula against the direct formula") {
  // abelian: everything is killed
  LieAlgebra ab = make_abelian(3);
  CHECK(lie_derivative(ab, basis_vector(3, 0), basis_covector(3, 2)).is_zero());

  // the solvable example: L_{e1} Phi = 0 but L_{e2} Phi != 0
  LieAlgebra d41 = parse_structure_notation("(12+34,0,-23,0)");
  KForm phi = parse_form_expr("2*e12+e34", d41);
  CHECK(lie_derivative(d41, basis_vector(4, 0), phi).is_zero());
  CHECK(!lie_derivative(d41, basis_vector(4, 1), phi).is_zero());

  std::mt19937_64 rng(41);
  for (const LieAlgebra& a : catalog_algebras()) {
    if (a.dim == 0 || a.dim > 6) continue;
    for (int iter = 0; iter < 3; ++iter) {
      int p = 1 + static_cast<int>(rng() % 2);
      KForm f = random_form(rng, a.dim, p);
      RatVector v = zero_vector(a.dim);
      for (int i = 0; i < a.dim; ++i) v(i) = Rational(static_cast<int>(rng() % 3) - 1);
      CHECK(lie_derivative(a, v, f) == lie_derivative_direct(a, v, f));
    }
  }
}

TEST_CASE("d squares to zero on every catalog algebra") {
  std::mt19937_64 rng(43);
  for (const LieAlgebra& a : catalog_algebras()) {
    if (a.dim == 0) continue;
    for (int i = 1; i <= a.dim; ++i) {
      KForm dd = ce_differential(a, ce_differential(a, basis_covector(a.dim, i)));
      CHECK(dd.is_zero());
    }
    if (a.dim <= 8) {
      KForm f = random_form(rng, a.dim, 2);
      CHECK(ce_differential(a, ce_differential(a, f)).is_zero());
    }
  }
}

TEST_CASE("direct sums") {
  LieAlgebra h3 = make_heisenberg(3);
  LieAlgebra s = direct_sum(h3, make_abelian(1));
  CHECK(s.dim == 4);
  CHECK(s.brackets.size() == 1);
  LieAlgebra a = parse_structure_notation("(0,0,12)");
  LieAlgebra same = direct_sum(make_abelian(0), a);
  CHECK(same.dim == a.dim);
  CHECK(same.brackets == a.brackets);
}

TEST_CASE("evaluation of forms on vectors") {
  int n = 4;
  KForm f = parse_form_expr("2*e12+e34", n);
  CHECK(evaluate(f, {basis_vector(n, 0), basis_vector(n, 1)}) == Rational(2));
  CHECK(evaluate(f, {basis_vector(n, 1), basis_vector(n, 0)}) == Rational(-2));
  CHECK(evaluate(f, {basis_vector(n, 2), basis_vector(n, 3)}) == Rational(1));
  CHECK(evaluate(f, {basis_vector(n, 0), basis_vector(n, 2)}) == Rational(0));
}

TEST_CASE("signatures separate g1 from g2 and survive base change") {
  LieAlgebra g1 = parse_structure_notation("(0,0,0,12)");
  LieAlgebra g2 = parse_structure_notation("(0,0,12,13)");
  InvariantSignature s1 = signature(g1), s2 = signature(g2);
  CHECK(s1 != s2);
  CHECK(s1.betti[0] == 3);
  CHECK(s2.betti[0] == 2);

  // basis permutation: signature is invariant
  RatMatrix p = zero_matrix(4, 4);
  p(0, 2) = Rational(1);
  p(1, 0) = Rational(1);
  p(2, 3) = Rational(1);
  p(3, 1) = Rational(1);
  CHECK(signature(transport(g2, p)) == s2);
}
