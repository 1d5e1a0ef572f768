#include "lcs/nilpotent.hpp"

#include "lcs/cohomology.hpp"

namespace lcs {

LowerCentralSeries lower_central_series(const LieAlgebra& a) {
  LowerCentralSeries out;
  out.dims.push_back(a.dim);
  // current term as columns; start with the full space
  RatMatrix cur = identity_matrix(a.dim);
  while (true) {
    // [g, cur]
    std::vector<RatVector> gens;
    for (int i = 0; i < a.dim; ++i) {
      RatVector ei = basis_vector(a.dim, i);
      for (Eigen::Index c = 0; c < cur.cols(); ++c)
        gens.push_back(a.bracket(ei, cur.col(c)));
    }
    RatMatrix next = column_space_basis(columns(gens, a.dim));
    int d = static_cast<int>(next.cols());
    if (d == out.dims.back()) {
      out.nilpotent = (d == 0);
      break;
    }
    out.dims.push_back(d);
    if (d == 0) {
      out.nilpotent = true;
      break;
    }
    cur = next;
  }
  if (out.nilpotent) out.step = static_cast<int>(out.dims.size()) - 1;
  if (a.dim == 0) {
    out.nilpotent = true;
    out.step = 1;
    out.dims = {0};
  }
  if (out.nilpotent && out.step == 0) out.step = 1;  // abelian: dims = (n, 0) gives step 1
  return out;
}

bool is_nilpotent(const LieAlgebra& a) { return lower_central_series(a).nilpotent; }

Filtration characteristic_filtration(const LieAlgebra& a) {
  if (!is_nilpotent(a)) throw NotNilpotent("characteristic_filtration: algebra is not nilpotent");
  Filtration out;
  const int n = a.dim;
  RatMatrix d1 = differential_matrix(a, 1, nullptr);
  RatMatrix w = columns(kernel_basis(d1), n);  // W_1 = ker d
  int prev = 0;
  while (true) {
    int cur = static_cast<int>(w.cols());
    out.spaces.push_back(w);
    out.profile.push_back(cur - prev);
    prev = cur;
    if (cur == n) break;
    if (out.spaces.size() > static_cast<std::size_t>(n) + 1)
      throw Error("characteristic_filtration: filtration failed to exhaust the dual");
    // Lambda^2 W_{k-1} inside Lambda^2 g^*: wedges of the column forms
    std::vector<RatVector> wedges;
    for (Eigen::Index i = 0; i < w.cols(); ++i) {
      KForm fi = vector_to_form(w.col(i), n, 1);
      for (Eigen::Index j = i + 1; j < w.cols(); ++j) {
        KForm fj = vector_to_form(w.col(j), n, 1);
        wedges.push_back(form_to_vector(wedge(fi, fj)));
      }
    }
    Eigen::Index two_dim = static_cast<Eigen::Index>(monomial_basis(n, 2).size());
    RatMatrix target = column_space_basis(columns(wedges, two_dim));
    std::vector<RatVector> pre = preimage_basis(d1, target);
    w = columns(pre, n);
  }
  out.steps = static_cast<int>(out.spaces.size());
  return out;
}

FiltrationVerdict lcs_filtration_obstruction(const LieAlgebra& a) {
  if (!is_nilpotent(a)) throw NotNilpotent("lcs_filtration_obstruction: algebra is not nilpotent");
  if (a.dim % 2 != 0) throw DimensionError("lcs_filtration_obstruction: dimension must be even");
  if (a.is_abelian()) return FiltrationVerdict::AbelianNoLcs;
  Filtration f = characteristic_filtration(a);
  return f.profile.back() >= 2 ? FiltrationVerdict::ObstructedFmTooBig
                               : FiltrationVerdict::Passes;
}

bool is_unimodular(const LieAlgebra& a) {
  for (int i = 0; i < a.dim; ++i) {
    RatMatrix ad = a.ad(basis_vector(a.dim, i));
    Rational tr(0);
    for (int k = 0; k < a.dim; ++k) tr += ad(k, k);
    if (!tr.is_zero()) return false;
  }
  return true;
}

std::vector<RatVector> center(const LieAlgebra& a) {
  // X central iff ad-matrix columns vanish: stack the maps X -> [X, e_j]
  RatMatrix stacked = zero_matrix(static_cast<Eigen::Index>(a.dim) * a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    RatVector ej = basis_vector(a.dim, j);
    for (int i = 0; i < a.dim; ++i) {
      RatVector br = a.bracket(basis_vector(a.dim, i), ej);
      for (int k = 0; k < a.dim; ++k)
        stacked(static_cast<Eigen::Index>(j) * a.dim + k, i) = br(k);
    }
  }
  return kernel_basis(stacked);
}

}  // namespace lcs
