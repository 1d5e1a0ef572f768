#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcs/linalg.hpp"
#include "lcs/sparse_poly.hpp"

namespace lcs {

/// Ordered monomial index e^{i1...ik}, strictly increasing, 1-based.
using FormIndex = std::vector<int>;

namespace detail {

/// Sort a concatenated index tuple; nullopt when an index repeats,
/// otherwise the sorted tuple and the sign of the sorting permutation.
std::optional<std::pair<FormIndex, int>> normalize_index(FormIndex idx);

template <typename K>
K coeff_from_rational(const Rational& r);

template <>
inline Rational coeff_from_rational<Rational>(const Rational& r) { return r; }

template <>
inline SparsePoly coeff_from_rational<SparsePoly>(const Rational& r) {
  return SparsePoly::constant(r);
}

template <typename K>
bool coeff_is_zero(const K& c);

template <>
inline bool coeff_is_zero<Rational>(const Rational& c) { return c.is_zero(); }

template <>
inline bool coeff_is_zero<SparsePoly>(const SparsePoly& c) { return c.is_zero(); }

}  // namespace detail

/// Alternating k-form on a fixed n-dimensional space, as coefficients on
/// the strictly increasing basis monomials. Templated on the coefficient
/// ring (exact rationals for ordinary forms, sparse polynomials for forms
/// with formal parameters).
template <typename K>
struct FormT {
  int dim = 0;
  int degree = 0;
  std::map<FormIndex, K> terms;

  FormT() = default;
  FormT(int n, int k) : dim(n), degree(k) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(FormIndex idx, K coeff) {
    if (detail::coeff_is_zero(coeff)) return;
    auto norm = detail::normalize_index(std::move(idx));
    if (!norm) return;
    K signed_coeff = std::move(coeff);
    if (norm->second < 0) signed_coeff = -signed_coeff;
    auto it = terms.find(norm->first);
    if (it == terms.end()) {
      terms.emplace(std::move(norm->first), std::move(signed_coeff));
    } else {
      it->second = it->second + signed_coeff;
      if (detail::coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  K coeff(const FormIndex& idx) const {
    auto it = terms.find(idx);
    return it == terms.end() ? K(0) : it->second;
  }

  friend bool operator==(const FormT& a, const FormT& b) {
    return a.dim == b.dim && a.degree == b.degree && a.terms == b.terms;
  }
  friend bool operator!=(const FormT& a, const FormT& b) { return !(a == b); }
};

using KForm = FormT<Rational>;
using PolyCoeffForm = FormT<SparsePoly>;

template <typename K>
FormT<K> operator+(const FormT<K>& a, const FormT<K>& b) {
  if (a.dim != b.dim || a.degree != b.degree)
    throw DimensionError("form addition: shape mismatch");
  FormT<K> out = a;
  for (const auto& [idx, c] : b.terms) {
    auto it = out.terms.find(idx);
    if (it == out.terms.end()) {
      out.terms.emplace(idx, c);
    } else {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) out.terms.erase(it);
    }
  }
  return out;
}

template <typename K>
FormT<K> operator-(const FormT<K>& a) {
  FormT<K> out = a;
  for (auto& [idx, c] : out.terms) c = -c;
  return out;
}

template <typename K>
FormT<K> operator-(const FormT<K>& a, const FormT<K>& b) {
  return a + (-b);
}

template <typename K>
FormT<K> scale(const FormT<K>& f, const K& c) {
  FormT<K> out(f.dim, f.degree);
  if (detail::coeff_is_zero(c)) return out;
  for (const auto& [idx, coeff] : f.terms) {
    K nc = coeff * c;
    if (!detail::coeff_is_zero(nc)) out.terms.emplace(idx, std::move(nc));
  }
  return out;
}

/// Graded-commutative wedge product. Degrees exceeding the dimension give
/// the zero form.
template <typename K>
FormT<K> wedge(const FormT<K>& a, const FormT<K>& b) {
  if (a.dim != b.dim) throw DimensionError("wedge: forms on different spaces");
  FormT<K> out(a.dim, a.degree + b.degree);
  if (out.degree > a.dim) return out;
  for (const auto& [ia, ca] : a.terms) {
    for (const auto& [ib, cb] : b.terms) {
      FormIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  }
  return out;
}

template <typename K>
FormT<K> wedge_pow(const FormT<K>& f, int p) {
  FormT<K> out(f.dim, 0);
  out.add_term({}, detail::coeff_from_rational<K>(Rational(1)));
  for (int i = 0; i < p; ++i) out = wedge(out, f);
  return out;
}

/// Interior product with a rational vector; degree-0 input is an error.
template <typename K>
FormT<K> interior(const RatVector& v, const FormT<K>& f) {
  if (f.degree == 0) throw Error("interior: degree-0 form");
  if (v.size() != f.dim) throw DimensionError("interior: vector/form mismatch");
  FormT<K> out(f.dim, f.degree - 1);
  for (const auto& [idx, c] : f.terms) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const Rational& vi = v(idx[p] - 1);
      if (vi.is_zero()) continue;
      FormIndex rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (q != p) rest.push_back(idx[q]);
      Rational s = (p % 2 == 0) ? vi : -vi;
      out.add_term(std::move(rest), c * detail::coeff_from_rational<K>(s));
    }
  }
  return out;
}

/// Coefficient of the top monomial e^{1...n} (zero unless degree == dim).
template <typename K>
K top_coefficient(const FormT<K>& f) {
  if (f.degree != f.dim) return K(0);
  FormIndex top(static_cast<std::size_t>(f.dim));
  for (int i = 0; i < f.dim; ++i) top[static_cast<std::size_t>(i)] = i + 1;
  return f.coeff(top);
}

/// Basis monomials of degree k in dimension n, in lexicographic order.
std::vector<FormIndex> monomial_basis(int n, int k);

/// Coordinates of a form in the monomial basis of its degree.
RatVector form_to_vector(const KForm& f);
KForm vector_to_form(const RatVector& v, int dim, int degree);

/// Skew matrix B with B(i,j) = f(e_i, e_j) of a 2-form.
RatMatrix two_form_matrix(const KForm& f);
KForm two_form_from_matrix(const RatMatrix& b);

/// Evaluate a k-form on k vectors (determinant expansion per monomial).
Rational evaluate(const KForm& f, const std::vector<RatVector>& vectors);

std::string form_str(const KForm& f);

}  // namespace lcs
