#include <doctest.h>

#include "lcs/catalog.hpp"
#include "lcs/nilpotent.hpp"
#include "lcs/notation.hpp"
#include "lcs/search.hpp"

using namespace lcs;

namespace {

/// Brute-force symplectic oracle: scan integer combinations of the cocycle
/// basis for a nondegenerate one. Can only confirm existence.
bool symplectic_brute_force(const LieAlgebra& a, int bound) {
  CohomologyReport rep = betti_numbers(a, std::nullopt);
  const auto& z2 = rep.cocycle_bases[2];
  std::vector<int> idx(z2.size(), -bound);
  while (true) {
    KForm sigma(a.dim, 2);
    for (std::size_t i = 0; i < z2.size(); ++i)
      sigma = sigma + scale(z2[i], Rational(idx[i]));
    if (!top_coefficient(wedge_pow(sigma, a.dim / 2)).is_zero()) return true;
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] <= bound) break;
      idx[pos] = -bound;
      ++pos;
    }
    if (pos == idx.size()) return false;
  }
}

}  // namespace

TEST_CASE("symplectic existence for the product family") {
  SearchConfig cfg;
  ExistenceVerdict v6 = symplectic_exists(product_family_algebra(3), cfg);
  CHECK(v6.exists());
  REQUIRE(v6.symplectic_cert);
  CHECK(verify_symplectic(product_family_algebra(3), *v6.symplectic_cert).ok());

  for (int n : {4, 5}) {
    ExistenceVerdict v = symplectic_exists(product_family_algebra(n), cfg);
    CHECK(v.impossible());
    CHECK(v.reason == ImpossibleReason::PfaffianIdenticallyZero);
  }
  CHECK_THROWS_AS(symplectic_exists(make_abelian(3)), DimensionError);
  CHECK_THROWS_AS(symplectic_exists(make_abelian(14)), DimensionError);
}

TEST_CASE("symplectic verdicts match the dimension-6 list") {
  SearchConfig cfg;
  for (const CatalogEntry& e : load_catalog()) {
    if (!e.dim6_table_row) continue;
    ExistenceVerdict v = symplectic_exists(e.algebra, cfg);
    CHECK_MESSAGE(v.exists() == e.expect_symplectic->value, e.label);
    if (v.exists()) CHECK(verify_symplectic(e.algebra, *v.symplectic_cert).ok());
  }
}

TEST_CASE("symplectic search agrees with the brute-force oracle in dims 4 and 6") {
  SearchConfig cfg;
  for (const CatalogEntry& e : load_catalog()) {
    if (e.algebra.dim != 4 && e.algebra.dim != 6) continue;
    if (e.algebra.dim % 2 != 0) continue;
    bool brute = symplectic_brute_force(e.algebra, 1);
    ExistenceVerdict v = symplectic_exists(e.algebra, cfg);
    if (brute) CHECK(v.exists());           // oracle found one: search must too
    if (v.impossible()) CHECK(!brute);      // impossibility means the oracle finds none
  }
}

TEST_CASE("the symbolic pfaffian vanishes identically exactly in the impossible cases") {
  CHECK(symplectic_pfaffian(product_family_algebra(4)).is_zero());
  CHECK(!symplectic_pfaffian(product_family_algebra(3)).is_zero());
  CHECK(!symplectic_pfaffian(parse_structure_notation("(0,0,0,12)")).is_zero());
}

TEST_CASE("contact existence") {
  SearchConfig cfg;
  ExistenceVerdict h3 = contact_exists(parse_structure_notation("(0,0,12)"), cfg);
  CHECK(h3.exists());
  REQUIRE(h3.contact_cert);
  CHECK(verify_contact(parse_structure_notation("(0,0,12)"), h3.contact_cert->theta).ok());

  ExistenceVerdict ab = contact_exists(make_abelian(5), cfg);
  CHECK(ab.impossible());

  ExistenceVerdict no = contact_exists(parse_structure_notation("(0,0,12,13,14)"), cfg);
  CHECK(no.impossible());
  CHECK(no.reason == ImpossibleReason::ContactPolynomialZero);

  // the contact family carries eta as a contact form in every dimension
  for (int n : {3, 4}) {
    ExistenceVerdict v = contact_exists(contact_family_algebra(n), cfg);
    CHECK(v.exists());
  }
  CHECK_THROWS_AS(contact_exists(make_abelian(4)), DimensionError);
}

TEST_CASE("the contact polynomial of heis3 is the square of the theta_3 coordinate") {
  SparsePoly p = contact_polynomial(parse_structure_notation("(0,0,12)"));
  SparsePoly u3 = SparsePoly::variable("u3");
  CHECK((p == u3 * u3 || p == -(u3 * u3)));
}

TEST_CASE("first-kind certificate search on the dimension-4 classification") {
  SearchConfig cfg;
  ExistenceVerdict g1 = lcs_first_kind_search(parse_structure_notation("(0,0,0,12)"), cfg);
  REQUIRE(g1.exists());
  CHECK(verify_lcs_first_kind(parse_structure_notation("(0,0,0,12)"), g1.lcs_cert->first,
                              g1.lcs_cert->second)
            .ok());
  ExistenceVerdict g2 = lcs_first_kind_search(parse_structure_notation("(0,0,12,13)"), cfg);
  CHECK(g2.exists());
  ExistenceVerdict ab = lcs_first_kind_search(make_abelian(4), cfg);
  CHECK(ab.impossible());
  CHECK(ab.reason == ImpossibleReason::CenterObstruction);
}

TEST_CASE("first-kind certificate search across the dimension-6 list") {
  SearchConfig cfg;
  for (const CatalogEntry& e : load_catalog()) {
    if (!e.dim6_table_row) continue;
    ExistenceVerdict v = lcs_first_kind_search(e.algebra, cfg);
    REQUIRE_MESSAGE(v.exists(), e.label);
    CHECK(verify_lcs_first_kind(e.algebra, v.lcs_cert->first, v.lcs_cert->second).ok());
  }
}

TEST_CASE("searches that must fail or stay inconclusive") {
  SearchConfig cfg;
  cfg.budget = 40;  // keep the trial log short
  // the filtration obstruction fires
  ExistenceVerdict obstructed =
      lcs_first_kind_search(parse_structure_notation("(0,0,0,0,12,13)"), cfg);
  CHECK(obstructed.impossible());
  CHECK(obstructed.reason == ImpossibleReason::FilterObstruction);

  // L_{6,13} carries no such structure; the search itself reports
  // only the exhausted budget
  ExistenceVerdict l613 =
      lcs_first_kind_search(parse_structure_notation("(0,0,0,12,14,15+23)"), cfg);
  CHECK(l613.outcome == ExistenceVerdict::Outcome::NoCertificateFound);
  CHECK(!l613.log.empty());
}

TEST_CASE("search is consistent with the obstruction across the catalog") {
  SearchConfig cfg;
  cfg.budget = 24;
  for (const CatalogEntry& e : load_catalog()) {
    const LieAlgebra& a = e.algebra;
    if (a.dim % 2 != 0 || a.dim < 4 || a.dim > 6 || !is_nilpotent(a)) continue;
    if (!a.is_abelian() &&
        lcs_filtration_obstruction(a) == FiltrationVerdict::ObstructedFmTooBig)
      CHECK(!lcs_first_kind_search(a, cfg).exists());
  }
}

TEST_CASE("fixed seeds reproduce verdicts") {
  SearchConfig cfg;
  cfg.seed = 99;
  LieAlgebra a = parse_structure_notation("(0,0,0,0,12,15+23)");
  ExistenceVerdict v1 = symplectic_exists(a, cfg);
  ExistenceVerdict v2 = symplectic_exists(a, cfg);
  REQUIRE(v1.exists());
  REQUIRE(v2.exists());
  CHECK(*v1.symplectic_cert == *v2.symplectic_cert);
}
