#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcs/polyforms.hpp"
#include "lcs/search.hpp"

namespace lcs {

/// An expected verdict together with where it comes from: "literature" for
/// published classification facts, "derived" for values recomputed here,
/// "trivial" for immediate ones.
template <typename T>
struct Expected {
  T value{};
  std::string provenance;
};

struct CatalogEntry {
  std::string label;
  std::vector<std::string> alt_labels;  // alternative naming conventions
  LieAlgebra algebra;

  std::optional<std::pair<KForm, KForm>> lcs_cert;   // (omega, eta)
  std::optional<std::pair<KForm, KForm>> exact_lcs;  // (phi, omega), not first kind
  std::optional<KForm> symplectic_cert;
  std::optional<KForm> contact_cert;
  std::optional<RatMatrix> complex_j;

  std::optional<Expected<bool>> expect_lcs_first_kind;
  std::optional<Expected<bool>> expect_symplectic;
  std::optional<Expected<int>> expect_b1;
  std::optional<Expected<bool>> expect_j_integrable;
  std::optional<Expected<Kind>> expect_kind;

  bool dim6_table_row = false;  // member of the 11-row dimension-6 list
  std::string notes;
};

std::vector<CatalogEntry> load_catalog();

/// Heisenberg-with-line algebras heis_{2n-1} + R used for the b_1 family.
LieAlgebra heisenberg_with_line(int n);

/// The (2n-1)-dimensional contact algebras of the higher-dimensional
/// family, in the coframe order (a_1, b_1, ..., a_{n-1}, b_{n-1}, eta):
/// d b_{n-1} = a_1 ^ a_{n-1}, d eta = sum a_i ^ b_i.
LieAlgebra contact_family_algebra(int n);

/// g_{2n} = contact_family_algebra(n) + R, with the extra closed covector
/// last.
LieAlgebra product_family_algebra(int n);

/// The complex structure of the product family: J X_1 = -X_{n-1},
/// J Y_1 = -Y_{n-1}, J X_i = Y_i (2 <= i <= n-2), J Z = -T, J^2 = -Id.
RatMatrix product_family_complex_structure(int n);

/// Group-level data: a polynomial group with its left-invariant coframe,
/// flow, lattice and the induced Lie algebra (basis dual to the coframe,
/// signs kept exactly as listed).
struct GroupModel {
  std::string name;
  GroupLaw group;
  std::vector<std::string> coframe_names;
  std::vector<PolyForm> coframe;
  LieAlgebra algebra;

  std::optional<PolyMap> flow;       // strict contactomorphism family
  std::string flow_param;
  int preserved_form = -1;           // index into coframe preserved by the flow
  std::optional<LatticeSpec> lattice;
};

struct PolyWitnesses {
  std::vector<GroupModel> models;
  std::vector<std::pair<std::string, ChiTildeWitness>> chi_tildes;
  std::vector<std::pair<std::string, DoubleChiWitness>> double_chis;
  std::vector<std::pair<std::string, std::pair<GroupLaw, PolyFunc>>> cocycles;
};

PolyWitnesses load_group_catalog();

}  // namespace lcs
