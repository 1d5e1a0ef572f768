#include "lcs/form.hpp"

#include <algorithm>
#include <sstream>

namespace lcs {

namespace detail {

std::optional<std::pair<FormIndex, int>> normalize_index(FormIndex idx) {
  int sign = 1;
  // insertion sort, counting swaps; small tuples
  for (std::size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      sign = -sign;
      --j;
    }
    idx[j] = v;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return std::nullopt;
  return std::make_pair(std::move(idx), sign);
}

}  // namespace detail

std::vector<FormIndex> monomial_basis(int n, int k) {
  std::vector<FormIndex> out;
  if (k < 0 || k > n) return out;
  FormIndex cur(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int start, int pos) -> void {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - pos - 1); ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, v + 1, pos + 1);
    }
  };
  rec(rec, 1, 0);
  return out;
}

RatVector form_to_vector(const KForm& f) {
  std::vector<FormIndex> basis = monomial_basis(f.dim, f.degree);
  RatVector v = zero_vector(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) v(static_cast<Eigen::Index>(i)) = f.coeff(basis[i]);
  return v;
}

KForm vector_to_form(const RatVector& v, int dim, int degree) {
  std::vector<FormIndex> basis = monomial_basis(dim, degree);
  if (static_cast<std::size_t>(v.size()) != basis.size())
    throw DimensionError("vector_to_form: length mismatch");
  KForm f(dim, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!v(static_cast<Eigen::Index>(i)).is_zero())
      f.terms.emplace(basis[i], v(static_cast<Eigen::Index>(i)));
  }
  return f;
}

RatMatrix two_form_matrix(const KForm& f) {
  if (f.degree != 2) throw DimensionError("two_form_matrix: degree must be 2");
  RatMatrix b = zero_matrix(f.dim, f.dim);
  for (const auto& [idx, c] : f.terms) {
    b(idx[0] - 1, idx[1] - 1) = c;
    b(idx[1] - 1, idx[0] - 1) = -c;
  }
  return b;
}

KForm two_form_from_matrix(const RatMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionError("two_form_from_matrix: non-square");
  KForm f(static_cast<int>(b.rows()), 2);
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = i + 1; j < b.cols(); ++j)
      if (!b(i, j).is_zero())
        f.terms.emplace(FormIndex{static_cast<int>(i) + 1, static_cast<int>(j) + 1}, b(i, j));
  return f;
}

Rational evaluate(const KForm& f, const std::vector<RatVector>& vectors) {
  if (static_cast<int>(vectors.size()) != f.degree)
    throw DimensionError("evaluate: expected one vector per form degree");
  Rational acc(0);
  const int k = f.degree;
  for (const auto& [idx, c] : f.terms) {
    RatMatrix minor = zero_matrix(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        minor(a, b) = vectors[static_cast<std::size_t>(b)](idx[static_cast<std::size_t>(a)] - 1);
    acc += c * determinant(minor);
  }
  return acc;
}

std::string form_str(const KForm& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : f.terms) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff.sign() < 0 ? "-" : "+");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    if (coeff != Rational(1) || idx.empty()) {
      os << coeff.str();
      if (!idx.empty()) os << "*";
    }
    if (!idx.empty()) {
      os << "e";
      for (int i : idx) os << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace lcs
