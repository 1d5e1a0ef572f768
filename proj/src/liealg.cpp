#include "lcs/liealg.hpp"

#include <sstream>

#include "lcs/cohomology.hpp"
#include "lcs/nilpotent.hpp"

namespace lcs {

RatVector LieAlgebra::basis_bracket(int i, int j) const {
  if (i < 1 || j < 1 || i > dim || j > dim)
    throw DimensionError("basis_bracket: index out of range");
  if (i == j) return zero_vector(dim);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets.find({i, j});
  if (it == brackets.end()) return zero_vector(dim);
  return flip ? RatVector(-it->second) : it->second;
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  if (x.size() != dim || y.size() != dim)
    throw DimensionError("bracket: vector length mismatch");
  RatVector out = zero_vector(dim);
  for (const auto& [ij, c] : brackets) {
    const auto& [i, j] = ij;
    Rational f = x(i - 1) * y(j - 1) - x(j - 1) * y(i - 1);
    if (f.is_zero()) continue;
    for (int k = 0; k < dim; ++k) out(k) += f * c(k);
  }
  return out;
}

RatMatrix LieAlgebra::ad(const RatVector& x) const {
  RatMatrix m = zero_matrix(dim, dim);
  for (int j = 1; j <= dim; ++j)
    m.col(j - 1) = bracket(x, basis_vector(dim, j - 1));
  return m;
}

LieAlgebra make_algebra(int dim, BracketMap brackets, std::string label) {
  if (dim < 0) throw DimensionError("make_algebra: negative dimension");
  LieAlgebra a;
  a.dim = dim;
  a.label = std::move(label);
  for (auto& [ij, c] : brackets) {
    const auto& [i, j] = ij;
    if (i < 1 || j <= i || j > dim)
      throw DimensionError("make_algebra: bracket indices out of range");
    if (c.size() != dim) throw DimensionError("make_algebra: coefficient length mismatch");
    bool zero = true;
    for (int k = 0; k < dim && zero; ++k)
      if (!c(k).is_zero()) zero = false;
    if (!zero) a.brackets.emplace(ij, std::move(c));
  }
  // Jacobi: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
  for (int i = 1; i <= dim; ++i) {
    RatVector ei = basis_vector(dim, i - 1);
    for (int j = i + 1; j <= dim; ++j) {
      RatVector ej = basis_vector(dim, j - 1);
      for (int k = j + 1; k <= dim; ++k) {
        RatVector ek = basis_vector(dim, k - 1);
        RatVector r = a.bracket(a.basis_bracket(i, j), ek) +
                      a.bracket(a.basis_bracket(j, k), ei) +
                      a.bracket(a.basis_bracket(k, i), ej);
        for (int t = 0; t < dim; ++t) {
          if (!r(t).is_zero()) {
            std::ostringstream os;
            os << "(";
            for (int u = 0; u < dim; ++u) os << (u ? "," : "") << r(u).str();
            os << ")";
            throw JacobiViolation(i, j, k, os.str());
          }
        }
      }
    }
  }
  return a;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  BracketMap out = a.brackets;
  for (auto& [ij, c] : out) {
    RatVector ext = zero_vector(a.dim + b.dim);
    ext.head(a.dim) = c;
    c = ext;
  }
  for (const auto& [ij, c] : b.brackets) {
    RatVector ext = zero_vector(a.dim + b.dim);
    ext.tail(b.dim) = c;
    out.emplace(std::make_pair(ij.first + a.dim, ij.second + a.dim), std::move(ext));
  }
  std::string label;
  if (!a.label.empty() || !b.label.empty())
    label = (a.label.empty() ? "?" : a.label) + "+" + (b.label.empty() ? "?" : b.label);
  return make_algebra(a.dim + b.dim, std::move(out), std::move(label));
}

LieAlgebra transport(const LieAlgebra& a, const RatMatrix& p) {
  if (p.rows() != a.dim || p.cols() != a.dim)
    throw DimensionError("transport: basis matrix shape mismatch");
  auto pinv = inverse(p);
  if (!pinv) throw Error("transport: basis matrix is singular");
  BracketMap out;
  for (int i = 1; i <= a.dim; ++i) {
    for (int j = i + 1; j <= a.dim; ++j) {
      RatVector br = a.bracket(p.col(i - 1), p.col(j - 1));
      out.emplace(std::make_pair(i, j), RatVector(*pinv * br));
    }
  }
  return make_algebra(a.dim, std::move(out), a.label);
}

LieAlgebra make_heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0) throw DimensionError("make_heisenberg: dimension must be odd >= 3");
  int m = (dim - 1) / 2;
  BracketMap br;
  for (int i = 0; i < m; ++i) {
    RatVector c = zero_vector(dim);
    c(dim - 1) = Rational(1);
    br.emplace(std::make_pair(2 * i + 1, 2 * i + 2), std::move(c));
  }
  return make_algebra(dim, std::move(br), "heis" + std::to_string(dim));
}

LieAlgebra make_abelian(int dim) {
  return make_algebra(dim, {}, "R^" + std::to_string(dim));
}

KForm d1_of_basis(const LieAlgebra& a, int m) {
  KForm out(a.dim, 2);
  for (const auto& [ij, c] : a.brackets) {
    if (c(m - 1).is_zero()) continue;
    out.add_term({ij.first, ij.second}, -c(m - 1));
  }
  return out;
}

KForm lie_derivative(const LieAlgebra& a, const RatVector& v, const KForm& f) {
  if (f.degree == 0) return KForm(f.dim, 0);
  KForm term1 = interior(v, ce_differential(a, f));
  KForm term2 = ce_differential(a, interior(v, f));
  return term1 + term2;
}

KForm lie_derivative_direct(const LieAlgebra& a, const RatVector& v, const KForm& f) {
  if (f.degree == 0) return KForm(f.dim, 0);
  KForm out(f.dim, f.degree);
  std::vector<FormIndex> basis = monomial_basis(f.dim, f.degree);
  for (const FormIndex& idx : basis) {
    Rational val(0);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      std::vector<RatVector> args;
      args.reserve(idx.size());
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q == p)
          args.push_back(a.bracket(v, basis_vector(a.dim, idx[q] - 1)));
        else
          args.push_back(basis_vector(a.dim, idx[q] - 1));
      }
      val -= evaluate(f, args);
    }
    if (!val.is_zero()) out.terms.emplace(idx, val);
  }
  return out;
}

KForm basis_covector(int dim, int i) {
  if (i < 1 || i > dim) throw DimensionError("basis_covector: index out of range");
  KForm f(dim, 1);
  f.terms.emplace(FormIndex{i}, Rational(1));
  return f;
}

KForm form_from_terms(int dim, int degree,
                      std::vector<std::pair<FormIndex, Rational>> terms) {
  KForm f(dim, degree);
  for (auto& [idx, c] : terms) {
    if (static_cast<int>(idx.size()) != degree)
      throw DimensionError("form_from_terms: degree mismatch");
    f.add_term(std::move(idx), std::move(c));
  }
  return f;
}

std::string InvariantSignature::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " b=(";
  for (std::size_t i = 0; i < betti.size(); ++i) os << (i ? "," : "") << betti[i];
  os << ") lcs=(";
  for (std::size_t i = 0; i < lcs_dims.size(); ++i) os << (i ? "," : "") << lcs_dims[i];
  os << ") center=" << center_dim;
  if (nilpotent) {
    os << " f=(";
    for (std::size_t i = 0; i < filtration_profile.size(); ++i)
      os << (i ? "," : "") << filtration_profile[i];
    os << ")";
  }
  return os.str();
}

InvariantSignature signature(const LieAlgebra& a) {
  InvariantSignature s;
  s.dim = a.dim;
  CohomologyReport rep = betti_numbers(a, std::nullopt);
  s.betti.assign(rep.betti.begin() + 1, rep.betti.end());  // b_1..b_n
  LowerCentralSeries lcsr = lower_central_series(a);
  s.lcs_dims = lcsr.dims;
  s.center_dim = static_cast<int>(center(a).size());
  s.nilpotent = lcsr.nilpotent;
  if (s.nilpotent && a.dim > 0) s.filtration_profile = characteristic_filtration(a).profile;
  return s;
}

}  // namespace lcs
