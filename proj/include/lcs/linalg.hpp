#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Reduced row echelon form with the pivot bookkeeping needed by the
/// solvers below. Pivots are chosen per column by smallest bit size.
struct RowEchelon {
  RatMatrix mat;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank = 0;
};

RowEchelon row_echelon(RatMatrix m);

Eigen::Index rank(const RatMatrix& m);

/// Basis of the null space; empty when the matrix is injective.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some particular solution of m x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

Rational determinant(RatMatrix m);

/// Columns spanning the column space (a maximal independent subset of the
/// input columns, reduced).
RatMatrix column_space_basis(const RatMatrix& m);

/// Basis of { x : m x lies in the span of the columns of target }.
std::vector<RatVector> preimage_basis(const RatMatrix& m, const RatMatrix& target);

bool in_column_span(const RatMatrix& cols, const RatVector& v);

/// Rows spanning { f : f(v) = 0 for every column v }.
RatMatrix annihilator(const RatMatrix& cols);

bool mat_equal(const RatMatrix& a, const RatMatrix& b);
bool vec_equal(const RatVector& a, const RatVector& b);
bool is_zero_vec(const RatVector& v);
bool is_zero_mat(const RatMatrix& m);

struct NilpotencyResult {
  bool nilpotent = false;
  int index = 0;  // least k with m^k = 0 when nilpotent
};

NilpotencyResult is_nilpotent_matrix(const RatMatrix& m);

RatMatrix identity_matrix(Eigen::Index n);
RatMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);
RatVector zero_vector(Eigen::Index n);
RatVector basis_vector(Eigen::Index n, Eigen::Index i);  // 0-based slot

/// Stack column vectors into a matrix (n x 0 when the list is empty).
RatMatrix columns(const std::vector<RatVector>& vs, Eigen::Index rows_hint = 0);

}  // namespace lcs
