#include "lcs/linalg.hpp"

#include <algorithm>

namespace lcs {

RatMatrix identity_matrix(Eigen::Index n) {
  RatMatrix m = zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RatMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  RatMatrix m(rows, cols);
  m.setConstant(Rational(0));
  return m;
}

RatVector zero_vector(Eigen::Index n) {
  RatVector v(n);
  v.setConstant(Rational(0));
  return v;
}

RatVector basis_vector(Eigen::Index n, Eigen::Index i) {
  RatVector v = zero_vector(n);
  v(i) = Rational(1);
  return v;
}

RatMatrix columns(const std::vector<RatVector>& vs, Eigen::Index rows_hint) {
  Eigen::Index rows = vs.empty() ? rows_hint : vs.front().size();
  RatMatrix m = zero_matrix(rows, static_cast<Eigen::Index>(vs.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = vs[static_cast<std::size_t>(j)];
  return m;
}

RowEchelon row_echelon(RatMatrix m) {
  RowEchelon out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // smallest-bit-size pivot in this column
    Eigen::Index pivot = -1;
    unsigned best = 0;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      unsigned b = m(i, c).bit_size();
      if (pivot < 0 || b < best) {
        pivot = i;
        best = b;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    Rational inv_p = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv_p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

Eigen::Index rank(const RatMatrix& m) { return row_echelon(m).rank; }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RowEchelon re = row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : re.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RatVector> basis;
  for (Eigen::Index free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[static_cast<std::size_t>(free_c)]) continue;
    RatVector v = zero_vector(cols);
    v(free_c) = Rational(1);
    for (Eigen::Index pr = 0; pr < re.rank; ++pr) {
      Eigen::Index pc = re.pivot_cols[static_cast<std::size_t>(pr)];
      v(pc) = -re.mat(pr, free_c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RowEchelon re = row_echelon(std::move(aug));
  for (Eigen::Index c : re.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in the augmented column
  RatVector x = zero_vector(m.cols());
  for (Eigen::Index pr = 0; pr < re.rank; ++pr) {
    Eigen::Index pc = re.pivot_cols[static_cast<std::size_t>(pr)];
    x(pc) = re.mat(pr, m.cols());
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity_matrix(n);
  RowEchelon re = row_echelon(std::move(aug));
  if (re.rank != n) return std::nullopt;
  for (Eigen::Index i = 0; i < n; ++i)
    if (re.pivot_cols[static_cast<std::size_t>(i)] != i) return std::nullopt;
  return RatMatrix(re.mat.rightCols(n));
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: non-square matrix");
  const Eigen::Index n = m.rows();
  Rational det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    unsigned best = 0;
    for (Eigen::Index i = c; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      unsigned b = m(i, c).bit_size();
      if (pivot < 0 || b < best) {
        pivot = i;
        best = b;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    Rational inv_p = Rational(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) * inv_p;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

RatMatrix column_space_basis(const RatMatrix& m) {
  RowEchelon re = row_echelon(m);
  RatMatrix basis = zero_matrix(m.rows(), re.rank);
  for (Eigen::Index k = 0; k < re.rank; ++k)
    basis.col(k) = m.col(re.pivot_cols[static_cast<std::size_t>(k)]);
  return basis;
}

std::vector<RatVector> preimage_basis(const RatMatrix& m, const RatMatrix& target) {
  // x with m x = target y for some y: kernel of [m | -target], x-part.
  RatMatrix aug(m.rows(), m.cols() + target.cols());
  aug.leftCols(m.cols()) = m;
  for (Eigen::Index j = 0; j < target.cols(); ++j)
    aug.col(m.cols() + j) = -target.col(j);
  std::vector<RatVector> ker = kernel_basis(aug);
  std::vector<RatVector> xs;
  xs.reserve(ker.size());
  for (const RatVector& v : ker) xs.push_back(v.head(m.cols()));
  RatMatrix span = column_space_basis(columns(xs, m.cols()));
  std::vector<RatVector> out;
  for (Eigen::Index j = 0; j < span.cols(); ++j) out.push_back(span.col(j));
  return out;
}

bool in_column_span(const RatMatrix& cols, const RatVector& v) {
  return solve(cols, v).has_value();
}

RatMatrix annihilator(const RatMatrix& cols) {
  std::vector<RatVector> ker = kernel_basis(RatMatrix(cols.transpose()));
  RatMatrix out = zero_matrix(static_cast<Eigen::Index>(ker.size()), cols.rows());
  for (std::size_t i = 0; i < ker.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = ker[i].transpose();
  return out;
}

bool mat_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool vec_equal(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool is_zero_vec(const RatVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

bool is_zero_mat(const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

NilpotencyResult is_nilpotent_matrix(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("is_nilpotent_matrix: non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return {true, 1};
  RatMatrix p = identity_matrix(n);
  for (int k = 1; k <= n; ++k) {
    p = RatMatrix(p * m);
    bool zero = true;
    for (Eigen::Index i = 0; i < n && zero; ++i)
      for (Eigen::Index j = 0; j < n && zero; ++j)
        if (!p(i, j).is_zero()) zero = false;
    if (zero) return {true, k};
  }
  return {false, 0};
}

}  // namespace lcs
