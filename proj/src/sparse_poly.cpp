#include "lcs/sparse_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace lcs {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SparsePoly SparsePoly::constant(Rational c) {
  SparsePoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

SparsePoly SparsePoly::variable(const std::string& name) {
  SparsePoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

SparsePoly SparsePoly::term(std::vector<std::string> vars, Exponents exps, Rational c) {
  if (vars.size() != exps.size()) throw Error("SparsePoly::term: size mismatch");
  if (c.is_zero()) return SparsePoly();
  std::vector<std::size_t> order(vars.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
  SparsePoly p;
  Exponents e;
  for (std::size_t i : order) {
    if (!p.vars_.empty() && p.vars_.back() == vars[i]) throw Error("SparsePoly::term: duplicate variable");
    p.vars_.push_back(vars[i]);
    e.push_back(exps[i]);
  }
  p.terms_.emplace(std::move(e), std::move(c));
  return p.compact();
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational SparsePoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("SparsePoly: not a constant");
  return terms_.begin()->second;
}

int SparsePoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int SparsePoly::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

SparsePoly SparsePoly::aligned_to(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i])
      throw Error("SparsePoly: variable list is not a superset");
    pos[i] = static_cast<std::size_t>(it - vars.begin());
  }
  SparsePoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

SparsePoly SparsePoly::compact() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return *this;
  SparsePoly out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) out.vars_.push_back(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(out.vars_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  std::vector<std::string> vars = merge_vars(a.vars_, b.vars_);
  SparsePoly aa = a.aligned_to(vars), bb = b.aligned_to(vars);
  for (const auto& [e, c] : bb.terms_) {
    auto it = aa.terms_.find(e);
    if (it == aa.terms_.end()) {
      aa.terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) aa.terms_.erase(it);
    }
  }
  return aa.compact();
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  std::vector<std::string> vars = merge_vars(a.vars_, b.vars_);
  SparsePoly aa = a.aligned_to(vars), bb = b.aligned_to(vars);
  SparsePoly out;
  out.vars_ = vars;
  for (const auto& [ea, ca] : aa.terms_) {
    for (const auto& [eb, cb] : bb.terms_) {
      SparsePoly::Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out.compact();
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  if (c.is_zero()) return SparsePoly();
  SparsePoly out = *this;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0) throw Error("SparsePoly::pow: negative exponent");
  SparsePoly r = constant(Rational(1));
  SparsePoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly ca = a.compact(), cb = b.compact();
  return ca.vars_ == cb.vars_ && ca.terms_ == cb.terms_;
}

SparsePoly SparsePoly::derivative(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return SparsePoly();
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  SparsePoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    ne[idx] -= 1;
    out.terms_.emplace(std::move(ne), c * Rational(e[idx]));
  }
  return out.compact();
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& subs) const {
  SparsePoly out;
  for (const auto& [e, c] : terms_) {
    SparsePoly t = constant(c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = subs.find(vars_[i]);
      SparsePoly base = (it != subs.end()) ? it->second : variable(vars_[i]);
      t = t * base.pow(e[i]);
    }
    out += t;
  }
  return out;
}

SparsePoly SparsePoly::rename(const std::map<std::string, std::string>& names) const {
  std::map<std::string, SparsePoly> subs;
  for (const auto& [from, to] : names) subs.emplace(from, variable(to));
  return substitute(subs);
}

Rational SparsePoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(vars_[i]);
      if (it == values.end())
        throw Error("SparsePoly::evaluate: missing value for " + vars_[i]);
      t *= lcs::pow(it->second, e[i]);
    }
    out += t;
  }
  return out;
}

Rational SparsePoly::coefficient(const std::map<std::string, int>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [v, d] : monomial) {
    if (d == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return Rational(0);
    e[static_cast<std::size_t>(it - vars_.begin())] = d;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << "*";
      mono << vars_[i];
      if (e[i] != 1) mono << "^" << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << coeff.str();
    } else if (coeff == Rational(1)) {
      os << mono.str();
    } else {
      os << coeff.str() << "*" << mono.str();
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

}  // namespace lcs
