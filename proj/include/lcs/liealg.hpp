#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcs/form.hpp"
#include "lcs/linalg.hpp"

namespace lcs {

/// Lie algebra over Q by structure constants: [e_i, e_j] = sum_k c^k_ij e_k,
/// stored sparsely for i < j only. Jacobi is verified at construction.
struct LieAlgebra {
  int dim = 0;
  std::map<std::pair<int, int>, RatVector> brackets;  // (i,j) with i<j, 1-based
  std::string label;

  /// [e_i, e_j] for any i, j (antisymmetry applied).
  RatVector basis_bracket(int i, int j) const;
  RatVector bracket(const RatVector& x, const RatVector& y) const;
  /// Matrix of ad_x : y -> [x, y].
  RatMatrix ad(const RatVector& x) const;

  bool is_abelian() const { return brackets.empty(); }
};

using BracketMap = std::map<std::pair<int, int>, RatVector>;

/// Builds a Lie algebra and verifies antisymmetric index bounds and the
/// Jacobi identity; throws JacobiViolation with the offending triple.
LieAlgebra make_algebra(int dim, BracketMap brackets, std::string label = "");

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// The same algebra expressed in the new basis given by the columns of p
/// (new_j = sum_i p(i,j) e_i); p must be invertible.
LieAlgebra transport(const LieAlgebra& a, const RatMatrix& p);

/// Heisenberg algebra of odd dimension 2m+1, basis (x_1, y_1, ..., x_m,
/// y_m, z) with [x_i, y_i] = z, i.e. dz = -sum x^i wedge y^i.
LieAlgebra make_heisenberg(int dim);

LieAlgebra make_abelian(int dim);

/// Chevalley-Eilenberg differential with trivial coefficients, fixed by
/// d a (x, y) = -a([x, y]) on 1-forms and extended as an antiderivation.
template <typename K>
FormT<K> ce_differential(const LieAlgebra& a, const FormT<K>& f);

KForm d1_of_basis(const LieAlgebra& a, int m);  // d e^m

/// Lie derivative along a vector, via the Cartan formula i_v d + d i_v.
KForm lie_derivative(const LieAlgebra& a, const RatVector& v, const KForm& f);

/// Direct coadjoint formula (L_v f)(y_1..y_k) = -sum_i f(y_1,..,[v,y_i],..,y_k);
/// agrees with the Cartan formula, kept as an independent route for checks.
KForm lie_derivative_direct(const LieAlgebra& a, const RatVector& v, const KForm& f);

KForm basis_covector(int dim, int i);
KForm form_from_terms(int dim, int degree,
                      std::vector<std::pair<FormIndex, Rational>> terms);

/// Isomorphism-invariant fingerprint: equality is necessary (not
/// sufficient) for the algebras to be isomorphic.
struct InvariantSignature {
  int dim = 0;
  std::vector<int> betti;              // b_1..b_n
  std::vector<int> lcs_dims;           // lower central series dims, g = C^0
  int center_dim = 0;
  bool nilpotent = false;
  std::vector<int> filtration_profile; // f_1..f_m, nilpotent case only

  friend bool operator==(const InvariantSignature& a, const InvariantSignature& b) {
    return a.dim == b.dim && a.betti == b.betti && a.lcs_dims == b.lcs_dims &&
           a.center_dim == b.center_dim && a.nilpotent == b.nilpotent &&
           a.filtration_profile == b.filtration_profile;
  }
  friend bool operator!=(const InvariantSignature& a, const InvariantSignature& b) {
    return !(a == b);
  }
  std::string str() const;
};

InvariantSignature signature(const LieAlgebra& a);

// --- template implementation ---

template <typename K>
FormT<K> ce_differential(const LieAlgebra& a, const FormT<K>& f) {
  if (f.dim != a.dim) throw DimensionError("ce_differential: form/algebra mismatch");
  FormT<K> out(a.dim, f.degree + 1);
  if (f.degree >= a.dim) return out;
  // cache the degree-1 differentials that actually occur
  std::map<int, KForm> d1;
  for (const auto& [idx, c] : f.terms) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      int m = idx[p];
      auto it = d1.find(m);
      if (it == d1.end()) it = d1.emplace(m, d1_of_basis(a, m)).first;
      if (it->second.is_zero()) continue;
      // d(e^{i1..ik}) = sum_p (-1)^(p) e^{i1..} ^ d e^{ip} ^ {..ik}
      Rational outer_sign((p % 2 == 0) ? 1 : -1);
      for (const auto& [didx, dc] : it->second.terms) {
        FormIndex nidx;
        nidx.reserve(idx.size() + 1);
        for (std::size_t q = 0; q < idx.size(); ++q)
          if (q != p) nidx.push_back(idx[q]);
        nidx.insert(nidx.end(), didx.begin(), didx.end());
        out.add_term(std::move(nidx),
                     c * detail::coeff_from_rational<K>(outer_sign * dc));
      }
    }
  }
  return out;
}

}  // namespace lcs
