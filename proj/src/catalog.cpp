#include "lcs/catalog.hpp"

#include "lcs/notation.hpp"

namespace lcs {

namespace {

CatalogEntry table_row(const std::string& notation, const std::string& omega,
                       const std::string& eta, const std::string& bm,
                       const std::string& cfgu, bool symplectic) {
  CatalogEntry e;
  e.label = bm;
  e.alt_labels = {cfgu, notation};
  e.algebra = parse_structure_notation(notation);
  e.algebra.label = bm;
  e.lcs_cert = std::make_pair(parse_form_expr(omega, e.algebra),
                              parse_form_expr(eta, e.algebra));
  e.expect_lcs_first_kind = Expected<bool>{true, "literature"};
  e.expect_symplectic = Expected<bool>{symplectic, "literature"};
  e.dim6_table_row = true;
  return e;
}

}  // namespace

LieAlgebra heisenberg_with_line(int n) {
  LieAlgebra a = direct_sum(make_heisenberg(2 * n - 1), make_abelian(1));
  a.label = "heis" + std::to_string(2 * n - 1) + "+R";
  return a;
}

LieAlgebra contact_family_algebra(int n) {
  if (n < 3) throw DimensionError("contact_family_algebra: n >= 3 required");
  const int dim = 2 * n - 1;  // (a_1, b_1, ..., a_{n-1}, b_{n-1}, eta)
  auto slot_a = [](int i) { return 2 * i - 1; };
  auto slot_b = [](int i) { return 2 * i; };
  BracketMap br;
  // d b_{n-1} = a_1 ^ a_{n-1}  =>  [A_1, A_{n-1}] = -B_{n-1}
  {
    RatVector c = zero_vector(dim);
    c(slot_b(n - 1) - 1) = Rational(-1);
    br.emplace(std::make_pair(slot_a(1), slot_a(n - 1)), std::move(c));
  }
  // d eta = sum a_i ^ b_i  =>  [A_i, B_i] = -Z
  for (int i = 1; i <= n - 1; ++i) {
    RatVector c = zero_vector(dim);
    c(dim - 1) = Rational(-1);
    br.emplace(std::make_pair(slot_a(i), slot_b(i)), std::move(c));
  }
  LieAlgebra a = make_algebra(dim, std::move(br));
  a.label = "h" + std::to_string(dim) + "(family)";
  return a;
}

LieAlgebra product_family_algebra(int n) {
  LieAlgebra a = direct_sum(contact_family_algebra(n), make_abelian(1));
  a.label = "g" + std::to_string(2 * n) + "(family)";
  return a;
}

RatMatrix product_family_complex_structure(int n) {
  const int dim = 2 * n;
  auto x_slot = [](int i) { return 2 * i - 2; };  // 0-based
  auto y_slot = [](int i) { return 2 * i - 1; };
  const int z_slot = dim - 2, t_slot = dim - 1;
  RatMatrix j = zero_matrix(dim, dim);
  auto set = [&](int from, int to, int sgn) { j(to, from) = Rational(sgn); };
  // J X_1 = -X_{n-1}, J X_{n-1} = X_1
  set(x_slot(1), x_slot(n - 1), -1);
  set(x_slot(n - 1), x_slot(1), 1);
  set(y_slot(1), y_slot(n - 1), -1);
  set(y_slot(n - 1), y_slot(1), 1);
  for (int i = 2; i <= n - 2; ++i) {
    set(x_slot(i), y_slot(i), 1);   // J X_i = Y_i
    set(y_slot(i), x_slot(i), -1);  // J Y_i = -X_i
  }
  set(z_slot, t_slot, -1);  // J Z = -T
  set(t_slot, z_slot, 1);   // J T = Z
  return j;
}

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> cat;

  // dimension 4: the two nilpotent lcs algebras and the abelian one
  {
    CatalogEntry e;
    e.label = "g1";
    e.alt_labels = {"(0,0,0,12)"};
    e.algebra = parse_structure_notation("(0,0,0,12)");
    e.algebra.label = "g1";
    e.lcs_cert = std::make_pair(parse_form_expr("e3", e.algebra),
                                parse_form_expr("e4", e.algebra));
    e.expect_lcs_first_kind = Expected<bool>{true, "literature"};
    e.expect_symplectic = Expected<bool>{true, "literature"};
    e.expect_b1 = Expected<int>{3, "derived"};
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.label = "g2";
    e.alt_labels = {"(0,0,12,13)"};
    e.algebra = parse_structure_notation("(0,0,12,13)");
    e.algebra.label = "g2";
    e.lcs_cert = std::make_pair(parse_form_expr("e2", e.algebra),
                                parse_form_expr("e4", e.algebra));
    e.expect_lcs_first_kind = Expected<bool>{true, "literature"};
    e.expect_symplectic = Expected<bool>{true, "literature"};
    e.expect_b1 = Expected<int>{2, "derived"};
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.label = "R4";
    e.algebra = make_abelian(4);
    e.expect_lcs_first_kind = Expected<bool>{false, "literature"};
    e.expect_symplectic = Expected<bool>{true, "trivial"};
    cat.push_back(std::move(e));
  }

  // the 11 nilpotent lcs algebras in dimension 6
  cat.push_back(table_row("(0,0,0,0,0,12+34)", "e5", "e6", "L_5,1+A_1", "h3", false));
  cat.push_back(table_row("(0,0,0,0,12,15+34)", "e2", "e6", "L_6,3", "h20", false));
  cat.push_back(table_row("(0,0,0,0,12,15+23)", "e4", "e6", "L_5,3+A_1", "h9", true));
  cat.push_back(table_row("(0,0,0,12,13,15+24)", "e3", "e6", "L_6,7", "h18", false));
  cat.push_back(table_row("(0,0,0,12,13,24+35)", "e1", "e6", "L_6,8+", "h19-", false));
  cat.push_back(table_row("(0,0,0,12,13,24-35)", "e1", "e6", "L_6,8-", "h19+", false));
  cat.push_back(table_row("(0,0,0,12,14,15+24)", "e3", "e6", "L_5,6+A_1", "h22", true));
  cat.push_back(table_row("(0,0,0,12,14,15+23+24)", "e3", "e6", "L_6,14", "h24", true));
  cat.push_back(table_row("(0,0,0,12,14+23,15-34)", "e2", "e6", "L_6,15", "h27", true));
  cat.push_back(table_row("(0,0,12,13,14,25-34)", "e1", "e6", "L_6,20", "h31", false));
  cat.push_back(table_row("(0,0,12,13,14+23,25-34)", "e1", "e6", "L_6,22", "h32", false));
  // b_1 = 2 for the L_6,22 row
  for (CatalogEntry& e : cat)
    if (e.label == "L_6,22") e.expect_b1 = Expected<int>{2, "literature"};

  // the solvable exact-but-second-kind example
  {
    CatalogEntry e;
    e.label = "d4,1";
    e.alt_labels = {"(12+34,0,-23,0)"};
    e.algebra = parse_structure_notation("(12+34,0,-23,0)");
    e.algebra.label = "d4,1";
    e.exact_lcs = std::make_pair(parse_form_expr("2*e12+e34", e.algebra),
                                 parse_form_expr("e2", e.algebra));
    e.expect_kind = Expected<Kind>{Kind::SecondKind, "literature"};
    e.notes = "exact lcs structure that is not of the first kind; not unimodular";
    cat.push_back(std::move(e));
  }

  // Heisenberg-with-line family: b_1 = 2n - 1
  for (int n : {2, 3, 4}) {
    CatalogEntry e;
    e.label = "heis" + std::to_string(2 * n - 1) + "+R";
    e.algebra = heisenberg_with_line(n);
    e.expect_b1 = Expected<int>{2 * n - 1, "literature"};
    cat.push_back(std::move(e));
  }

  // higher-dimensional family: contact part and its product with a line
  for (int n : {3, 4, 5}) {
    {
      CatalogEntry e;
      e.label = "h" + std::to_string(2 * n - 1) + "(family)";
      e.algebra = contact_family_algebra(n);
      // eta is the last coframe slot
      e.contact_cert = basis_covector(2 * n - 1, 2 * n - 1);
      cat.push_back(std::move(e));
    }
    {
      CatalogEntry e;
      e.label = "g" + std::to_string(2 * n) + "(family)";
      e.algebra = product_family_algebra(n);
      e.complex_j = product_family_complex_structure(n);
      e.expect_j_integrable = Expected<bool>{true, "literature"};
      e.expect_symplectic = Expected<bool>{n == 3, "literature"};
      e.expect_b1 = Expected<int>{2 * n - 2, "literature"};
      if (n == 3) {
        // sigma = a_1 ^ omega + a_2 ^ eta + b_1 ^ b_2 in the coframe order
        // (a1, b1, a2, b2, eta, omega) = (e1, e2, e3, e4, e5, e6)
        e.symplectic_cert = parse_form_expr("e16+e35+e24", e.algebra);
      }
      cat.push_back(std::move(e));
    }
  }

  return cat;
}

}  // namespace lcs
