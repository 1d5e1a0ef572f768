#include "lcs/pfaffian.hpp"

namespace lcs {

bool is_skew_symmetric(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

Rational pfaffian(const RatMatrix& m) {
  if (!is_skew_symmetric(m)) throw Error("pfaffian: matrix is not skew-symmetric");
  int n = static_cast<int>(m.rows());
  if (n % 2 != 0) return Rational(0);
  std::vector<Rational> flat(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = m(i, j);
  return detail::pfaffian_flat(flat, n);
}

SparsePoly pfaffian_generic(const std::vector<RatMatrix>& family) {
  if (family.empty()) return SparsePoly();
  int n = static_cast<int>(family.front().rows());
  if (n % 2 != 0) throw Error("pfaffian_generic: odd size");
  if (n > 12) throw Error("pfaffian_generic: size cap is 12");
  std::vector<std::string> names;
  names.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    names.push_back("t" + std::to_string(i + 1));
  std::vector<SparsePoly> flat(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < family.size(); ++k) {
    const RatMatrix& b = family[k];
    if (b.rows() != n || b.cols() != n)
      throw DimensionError("pfaffian_generic: mixed sizes in family");
    if (!is_skew_symmetric(b)) throw Error("pfaffian_generic: matrix is not skew-symmetric");
    SparsePoly tk = SparsePoly::variable(names[k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!b(i, j).is_zero())
          flat[static_cast<std::size_t>(i) * n + j] += tk.scaled(b(i, j));
  }
  return detail::pfaffian_flat(flat, n);
}

}  // namespace lcs
