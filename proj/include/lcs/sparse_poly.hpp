#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Variables are held as a sorted name list; terms map exponent vectors
/// (aligned with the variable list) to nonzero coefficients.
class SparsePoly {
 public:
  using Exponents = std::vector<int>;

  SparsePoly() = default;
  explicit SparsePoly(int v) {
    if (v != 0) terms_.emplace(Exponents{}, Rational(v));
  }
  static SparsePoly constant(Rational c);
  static SparsePoly variable(const std::string& name);
  /// Term c * prod vars[i]^exps[i] over an explicit variable list.
  static SparsePoly term(std::vector<std::string> vars, Exponents exps, Rational c);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  int total_degree() const;
  int degree_in(const std::string& var) const;

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const Rational& c) const;
  SparsePoly pow(int e) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly derivative(const std::string& var) const;

  /// Simultaneous substitution; variables absent from the map are kept.
  SparsePoly substitute(const std::map<std::string, SparsePoly>& subs) const;
  SparsePoly rename(const std::map<std::string, std::string>& names) const;

  /// Full evaluation. Every variable that occurs with nonzero exponent
  /// must be present in the map.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Coefficient of a monomial given as var -> exponent (others zero).
  Rational coefficient(const std::map<std::string, int>& monomial) const;

  /// Drop variables that no longer occur in any term.
  SparsePoly compact() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

  /// Remap onto a superset variable list (vars must contain vars_).
  SparsePoly aligned_to(const std::vector<std::string>& vars) const;

 private:
  std::vector<std::string> vars_;               // sorted, unique
  std::map<Exponents, Rational> terms_;         // no zero coefficients
};

}  // namespace lcs
