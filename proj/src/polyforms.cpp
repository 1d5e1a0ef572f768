#include "lcs/polyforms.hpp"

#include <algorithm>

namespace lcs {

void PolyForm::add_term(FormIndex idx, PolyFunc coeff) {
  if (coeff.is_zero()) return;
  auto norm = detail::normalize_index(std::move(idx));
  if (!norm) return;
  PolyFunc signed_coeff = std::move(coeff);
  if (norm->second < 0) signed_coeff = -signed_coeff;
  auto it = terms.find(norm->first);
  if (it == terms.end()) {
    terms.emplace(std::move(norm->first), std::move(signed_coeff));
  } else {
    it->second += signed_coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool operator==(const PolyForm& a, const PolyForm& b) {
  return a.coords == b.coords && a.degree == b.degree && a.terms == b.terms;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  if (a.coords != b.coords || a.degree != b.degree)
    throw DimensionError("PolyForm addition: shape mismatch");
  PolyForm out = a;
  for (const auto& [idx, c] : b.terms) out.add_term(idx, c);
  return out;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) {
  if (a.coords != b.coords || a.degree != b.degree)
    throw DimensionError("PolyForm subtraction: shape mismatch");
  PolyForm out = a;
  for (const auto& [idx, c] : b.terms) out.add_term(idx, -c);
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.coords != b.coords) throw DimensionError("PolyForm wedge: coordinate mismatch");
  PolyForm out(a.coords, a.degree + b.degree);
  if (out.degree > static_cast<int>(a.coords.size())) return out;
  for (const auto& [ia, ca] : a.terms) {
    for (const auto& [ib, cb] : b.terms) {
      FormIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  }
  return out;
}

PolyForm d(const PolyForm& f) {
  PolyForm out(f.coords, f.degree + 1);
  for (const auto& [idx, c] : f.terms) {
    for (std::size_t v = 0; v < f.coords.size(); ++v) {
      PolyFunc dc = c.derivative(f.coords[v]);
      if (dc.is_zero()) continue;
      FormIndex nidx;
      nidx.reserve(idx.size() + 1);
      nidx.push_back(static_cast<int>(v) + 1);
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      out.add_term(std::move(nidx), std::move(dc));
    }
  }
  return out;
}

PolyForm pullback(const PolyMap& m, const PolyForm& f) {
  if (m.target != f.coords) throw DimensionError("pullback: form does not live on the target");
  std::map<std::string, PolyFunc> subs;
  for (std::size_t j = 0; j < m.target.size(); ++j) subs.emplace(m.target[j], m.comps[j]);
  // pulled-back coordinate differentials: dT_j = sum_i d(comp_j)/d(S_i) dS_i
  std::vector<PolyForm> dt;
  dt.reserve(m.target.size());
  for (std::size_t j = 0; j < m.target.size(); ++j) {
    PolyForm w(m.source, 1);
    for (std::size_t i = 0; i < m.source.size(); ++i) {
      PolyFunc dc = m.comps[j].derivative(m.source[i]);
      if (!dc.is_zero()) w.add_term({static_cast<int>(i) + 1}, std::move(dc));
    }
    dt.push_back(std::move(w));
  }
  PolyForm out(m.source, f.degree);
  for (const auto& [idx, c] : f.terms) {
    PolyForm acc(m.source, 0);
    acc.add_term({}, c.substitute(subs));
    for (int i : idx) acc = wedge(acc, dt[static_cast<std::size_t>(i) - 1]);
    for (auto& [nidx, nc] : acc.terms) out.add_term(nidx, std::move(nc));
  }
  return out;
}

std::vector<PolyFunc> apply_map(const PolyMap& m, const std::vector<PolyFunc>& args) {
  if (args.size() != m.source.size()) throw DimensionError("apply_map: argument count mismatch");
  std::map<std::string, PolyFunc> subs;
  for (std::size_t i = 0; i < m.source.size(); ++i) subs.emplace(m.source[i], args[i]);
  std::vector<PolyFunc> out;
  out.reserve(m.comps.size());
  for (const PolyFunc& c : m.comps) out.push_back(c.substitute(subs));
  return out;
}

PolyMap compose(const PolyMap& m2, const PolyMap& m1) {
  if (m1.target != m2.source) throw DimensionError("compose: middle coordinates mismatch");
  PolyMap out;
  out.source = m1.source;
  out.target = m2.target;
  out.comps = apply_map(m2, m1.comps);
  return out;
}

std::vector<PolyFunc> coordinate_polys(const std::vector<std::string>& names) {
  std::vector<PolyFunc> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(SparsePoly::variable(n));
  return out;
}

std::vector<PolyFunc> constant_polys(const std::vector<Rational>& values) {
  std::vector<PolyFunc> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(SparsePoly::constant(v));
  return out;
}

std::vector<PolyFunc> GroupLaw::product(const std::vector<PolyFunc>& a,
                                        const std::vector<PolyFunc>& b) const {
  std::vector<PolyFunc> args = a;
  args.insert(args.end(), b.begin(), b.end());
  return apply_map(mul, args);
}

GroupLaw make_group_law(std::vector<std::string> coords, std::vector<PolyFunc> comps) {
  GroupLaw g;
  g.coords = coords;
  for (const std::string& c : coords) g.primed.push_back(c + "'");
  g.mul.source = g.coords;
  g.mul.source.insert(g.mul.source.end(), g.primed.begin(), g.primed.end());
  g.mul.target = g.coords;
  g.mul.comps = std::move(comps);
  if (g.mul.comps.size() != g.coords.size())
    throw DimensionError("make_group_law: component count mismatch");
  return g;
}

namespace {

std::vector<std::string> suffixed(const std::vector<std::string>& names,
                                  const std::string& suffix) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(n + suffix);
  return out;
}

bool all_zero(const std::vector<PolyFunc>& v) {
  return std::all_of(v.begin(), v.end(), [](const PolyFunc& p) { return p.is_zero(); });
}

std::vector<PolyFunc> sub_all(const std::vector<PolyFunc>& polys,
                              const std::map<std::string, PolyFunc>& subs) {
  std::vector<PolyFunc> out;
  out.reserve(polys.size());
  for (const PolyFunc& p : polys) out.push_back(p.substitute(subs));
  return out;
}

}  // namespace

GroupLawVerdict verify_group_law(const GroupLaw& g, const std::optional<PolyMap>& inv,
                                 const std::vector<Rational>& unit) {
  GroupLawVerdict v;
  const std::size_t k = g.coords.size();
  std::vector<PolyFunc> xa = coordinate_polys(suffixed(g.coords, "&a"));
  std::vector<PolyFunc> xb = coordinate_polys(suffixed(g.coords, "&b"));
  std::vector<PolyFunc> xc = coordinate_polys(suffixed(g.coords, "&c"));
  std::vector<PolyFunc> lhs = g.product(g.product(xa, xb), xc);
  std::vector<PolyFunc> rhs = g.product(xa, g.product(xb, xc));
  v.associative = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (lhs[i] != rhs[i]) {
      v.associative = false;
      v.detail = "associativity fails in component " + g.coords[i];
      break;
    }
  }
  std::vector<PolyFunc> e = constant_polys(unit);
  std::vector<PolyFunc> x = coordinate_polys(g.coords);
  std::vector<PolyFunc> le = g.product(e, x);
  std::vector<PolyFunc> re = g.product(x, e);
  v.unit_ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (le[i] != x[i] || re[i] != x[i]) {
      v.unit_ok = false;
      if (v.detail.empty()) v.detail = "unit fails in component " + g.coords[i];
      break;
    }
  }
  if (inv) {
    std::vector<PolyFunc> ix = apply_map(*inv, x);
    std::vector<PolyFunc> li = g.product(ix, x);
    std::vector<PolyFunc> ri = g.product(x, ix);
    v.inverse_ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (li[i] != e[i] || ri[i] != e[i]) {
        v.inverse_ok = false;
        if (v.detail.empty()) v.detail = "inverse fails in component " + g.coords[i];
        break;
      }
    }
  }
  return v;
}

bool verify_left_invariance(const GroupLaw& g, const PolyForm& f) {
  if (f.coords != g.coords) throw DimensionError("verify_left_invariance: coordinate mismatch");
  // act by an unprimed formal group element on the primed slot
  PolyMap left;
  left.source = g.primed;
  left.target = g.coords;
  left.comps = g.mul.comps;
  PolyForm pulled = pullback(left, f);
  // compare against f written in the primed coordinates
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < g.coords.size(); ++i) names.emplace(g.coords[i], g.primed[i]);
  PolyForm expected(g.primed, f.degree);
  for (const auto& [idx, c] : f.terms) expected.add_term(idx, c.rename(names));
  return pulled == expected;
}

bool verify_cocycle(const GroupLaw& g, const PolyFunc& phi) {
  std::vector<PolyFunc> s1 = coordinate_polys(suffixed(g.coords, "&a"));
  std::vector<PolyFunc> s2 = coordinate_polys(suffixed(g.coords, "&b"));
  std::vector<PolyFunc> s3 = coordinate_polys(suffixed(g.coords, "&c"));
  auto phi_at = [&](const std::vector<PolyFunc>& a, const std::vector<PolyFunc>& b) {
    std::map<std::string, PolyFunc> subs;
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
      subs.emplace(g.coords[i], a[i]);
      subs.emplace(g.primed[i], b[i]);
    }
    return phi.substitute(subs);
  };
  PolyFunc lhs = phi_at(s1, s2) - phi_at(s1, g.product(s2, s3)) +
                 phi_at(g.product(s1, s2), s3) - phi_at(s2, s3);
  return lhs.is_zero();
}

bool verify_automorphism(const GroupLaw& g, const PolyMap& m) {
  std::vector<PolyFunc> a = coordinate_polys(suffixed(g.coords, "&a"));
  std::vector<PolyFunc> b = coordinate_polys(suffixed(g.coords, "&b"));
  auto apply = [&](const std::vector<PolyFunc>& x) {
    std::map<std::string, PolyFunc> subs;
    for (std::size_t i = 0; i < g.coords.size(); ++i) subs.emplace(g.coords[i], x[i]);
    return sub_all(m.comps, subs);
  };
  std::vector<PolyFunc> lhs = apply(g.product(a, b));
  std::vector<PolyFunc> rhs = g.product(apply(a), apply(b));
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != rhs[i]) return false;
  return true;
}

bool verify_one_parameter_group(const GroupLaw& g, const PolyMap& flow,
                                const std::string& param) {
  const std::string other = param + "&2";
  std::map<std::string, PolyFunc> rename_param{{param, SparsePoly::variable(other)}};
  std::vector<PolyFunc> flow2 = sub_all(flow.comps, rename_param);
  // flow_{param} after flow_{other}
  std::map<std::string, PolyFunc> subs;
  for (std::size_t i = 0; i < g.coords.size(); ++i) subs.emplace(g.coords[i], flow2[i]);
  std::vector<PolyFunc> composed = sub_all(flow.comps, subs);
  std::map<std::string, PolyFunc> sum_param{
      {param, SparsePoly::variable(param) + SparsePoly::variable(other)}};
  std::vector<PolyFunc> expected = sub_all(flow.comps, sum_param);
  for (std::size_t i = 0; i < composed.size(); ++i)
    if (composed[i] != expected[i]) return false;
  return true;
}

bool verify_lattice_invariance(const PolyMap& m, const LatticeSpec& lat) {
  if (lat.constraints.size() != m.source.size() || m.comps.size() != m.source.size())
    throw DimensionError("verify_lattice_invariance: constraint count mismatch");
  // generic lattice point: coordinate i = modulus_i * k_i + offset_i
  std::map<std::string, PolyFunc> subs;
  for (std::size_t i = 0; i < m.source.size(); ++i) {
    PolyFunc gen = SparsePoly::variable(m.source[i] + "&k")
                       .scaled(lat.constraints[i].modulus) +
                   SparsePoly::constant(lat.constraints[i].offset);
    subs.emplace(m.source[i], gen);
  }
  for (std::size_t j = 0; j < m.comps.size(); ++j) {
    PolyFunc image = m.comps[j].substitute(subs) -
                     SparsePoly::constant(lat.constraints[j].offset);
    // (image - offset) / modulus must have integer coefficients; every
    // remaining variable (generator indices and any flow parameter) is a
    // formal integer
    for (const auto& [e, c] : image.terms()) {
      Rational scaled = c / lat.constraints[j].modulus;
      if (scaled.den() != 1) return false;
    }
  }
  return true;
}

namespace {

PolyFunc chi_with_param(const PolyFunc& chi, const std::string& param, const PolyFunc& value) {
  std::map<std::string, PolyFunc> subs{{param, value}};
  return chi.substitute(subs);
}

PolyFunc chi_at(const PolyFunc& chi, const std::vector<std::string>& coords,
                const std::vector<PolyFunc>& point) {
  std::map<std::string, PolyFunc> subs;
  for (std::size_t i = 0; i < coords.size(); ++i) subs.emplace(coords[i], point[i]);
  return chi.substitute(subs);
}

std::vector<PolyFunc> rep_at(const PolyMap& rep, const std::vector<std::string>& coords,
                             const std::vector<PolyFunc>& point,
                             const std::string& param, const PolyFunc& pvalue) {
  std::map<std::string, PolyFunc> subs{{param, pvalue}};
  for (std::size_t i = 0; i < coords.size(); ++i) subs.emplace(coords[i], point[i]);
  std::vector<PolyFunc> out;
  out.reserve(rep.comps.size());
  for (const PolyFunc& c : rep.comps) out.push_back(c.substitute(subs));
  return out;
}

PolyFunc cocycle_at(const PolyFunc& phi, const GroupLaw& g,
                    const std::vector<PolyFunc>& a, const std::vector<PolyFunc>& b) {
  std::map<std::string, PolyFunc> subs;
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    subs.emplace(g.coords[i], a[i]);
    subs.emplace(g.primed[i], b[i]);
  }
  return phi.substitute(subs);
}

}  // namespace

ChiVerdict verify_chi_identities(const ChiTildeWitness& w) {
  ChiVerdict v;
  const std::string& t = w.param;
  const std::string t2 = t + "&2";
  PolyFunc tP = SparsePoly::variable(t), t2P = SparsePoly::variable(t2);
  std::vector<PolyFunc> s = coordinate_polys(w.group.coords);

  // chi_{t+t'}(s) = chi_t(s) + chi_{t'}(rep_t(s))
  PolyFunc lhs1 = chi_with_param(w.chi, t, tP + t2P);
  std::vector<PolyFunc> moved = rep_at(w.rep, w.group.coords, s, t, tP);
  PolyFunc rhs1 = w.chi + chi_at(chi_with_param(w.chi, t, t2P), w.group.coords, moved);
  v.flow_identity = (lhs1 == rhs1);

  // chi_t(ss') - chi_t(s) - chi_t(s') = phi(rep_t s, rep_t s') - phi(s, s')
  std::vector<PolyFunc> sa = coordinate_polys(suffixed(w.group.coords, "&a"));
  std::vector<PolyFunc> sb = coordinate_polys(suffixed(w.group.coords, "&b"));
  PolyFunc lhs2 = chi_at(w.chi, w.group.coords, w.group.product(sa, sb)) -
                  chi_at(w.chi, w.group.coords, sa) - chi_at(w.chi, w.group.coords, sb);
  std::vector<PolyFunc> ma = rep_at(w.rep, w.group.coords, sa, t, tP);
  std::vector<PolyFunc> mb = rep_at(w.rep, w.group.coords, sb, t, tP);
  PolyFunc rhs2 = cocycle_at(w.cocycle, w.group, ma, mb) -
                  cocycle_at(w.cocycle, w.group, sa, sb);
  v.cocycle_difference = (lhs2 == rhs2);

  // d/dt|_0 (d_e chi_t) = 0
  v.derivative_at_unit = true;
  std::map<std::string, PolyFunc> at_unit;
  for (const std::string& c : w.group.coords) at_unit.emplace(c, SparsePoly::constant(Rational(0)));
  for (const std::string& c : w.group.coords) {
    PolyFunc grad = w.chi.derivative(c).substitute(at_unit);
    PolyFunc dt = grad.derivative(t);
    std::map<std::string, PolyFunc> t0{{t, SparsePoly::constant(Rational(0))}};
    if (!dt.substitute(t0).is_zero()) {
      v.derivative_at_unit = false;
      break;
    }
  }
  return v;
}

ChiVerdict verify_double_chi_identities(const DoubleChiWitness& w) {
  ChiVerdict v;
  const std::string& t = w.param;
  const std::string t2 = t + "&2";
  PolyFunc tP = SparsePoly::variable(t), t2P = SparsePoly::variable(t2);
  std::vector<PolyFunc> s = coordinate_polys(w.group.coords);

  // chi_{t+t'}(s) = chi_t(s) + chi_{t'}(rep_{-t}(s))
  PolyFunc lhs1 = chi_with_param(w.chi, t, tP + t2P);
  std::vector<PolyFunc> moved = rep_at(w.rep, w.group.coords, s, t, -tP);
  PolyFunc rhs1 = w.chi + chi_at(chi_with_param(w.chi, t, t2P), w.group.coords, moved);
  v.flow_identity = (lhs1 == rhs1);

  // chi_t(ss') - chi_t(s) - chi_t(s')
  //   = d/dr|_{r=-t} G(r) - d/dr|_{r=0} G(r),  G(r) = phi(rep_r s, rep_r s')
  std::vector<PolyFunc> sa = coordinate_polys(suffixed(w.group.coords, "&a"));
  std::vector<PolyFunc> sb = coordinate_polys(suffixed(w.group.coords, "&b"));
  PolyFunc lhs2 = chi_at(w.chi, w.group.coords, w.group.product(sa, sb)) -
                  chi_at(w.chi, w.group.coords, sa) - chi_at(w.chi, w.group.coords, sb);
  const std::string r = t + "&r";
  PolyFunc rP = SparsePoly::variable(r);
  std::vector<PolyFunc> ra = rep_at(w.rep, w.group.coords, sa, t, rP);
  std::vector<PolyFunc> rb = rep_at(w.rep, w.group.coords, sb, t, rP);
  PolyFunc big_g = cocycle_at(w.cocycle, w.group, ra, rb);
  PolyFunc dg = big_g.derivative(r);
  std::map<std::string, PolyFunc> at_minus_t{{r, -tP}};
  std::map<std::string, PolyFunc> at_zero{{r, SparsePoly::constant(Rational(0))}};
  PolyFunc rhs2 = dg.substitute(at_minus_t) - dg.substitute(at_zero);
  v.cocycle_difference = (lhs2 == rhs2);

  // d/dt|_0 (d_e chi_t)(X) = -sigma1(Z1, X)
  v.derivative_at_unit = true;
  std::map<std::string, PolyFunc> at_unit;
  for (const std::string& c : w.group.coords) at_unit.emplace(c, SparsePoly::constant(Rational(0)));
  RatMatrix sm = two_form_matrix(w.sigma1);
  RatVector expected = RatVector(-(sm.transpose() * w.z1));  // -sigma1(Z1, e_i)
  for (std::size_t i = 0; i < w.group.coords.size(); ++i) {
    PolyFunc grad = w.chi.derivative(w.group.coords[i]).substitute(at_unit);
    PolyFunc dt = grad.derivative(t);
    std::map<std::string, PolyFunc> t0{{t, SparsePoly::constant(Rational(0))}};
    PolyFunc val = dt.substitute(t0);
    if (!val.is_constant() ||
        val.constant_value() != expected(static_cast<Eigen::Index>(i))) {
      v.derivative_at_unit = false;
      break;
    }
  }
  return v;
}

LieAlgebra algebra_of_group(const GroupLaw& g) {
  const int n = static_cast<int>(g.coords.size());
  BracketMap br;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      RatVector c = zero_vector(n);
      for (int k = 0; k < n; ++k) {
        // coefficient of g_i h_j minus coefficient of g_j h_i
        std::map<std::string, int> mono_ij{{g.coords[static_cast<std::size_t>(i - 1)], 1},
                                           {g.primed[static_cast<std::size_t>(j - 1)], 1}};
        std::map<std::string, int> mono_ji{{g.coords[static_cast<std::size_t>(j - 1)], 1},
                                           {g.primed[static_cast<std::size_t>(i - 1)], 1}};
        c(k) = g.mul.comps[static_cast<std::size_t>(k)].coefficient(mono_ij) -
               g.mul.comps[static_cast<std::size_t>(k)].coefficient(mono_ji);
      }
      if (!is_zero_vec(c)) br.emplace(std::make_pair(i, j), std::move(c));
    }
  }
  return make_algebra(n, std::move(br));
}

bool coframe_matches_algebra(const std::vector<PolyForm>& coframe, const LieAlgebra& a) {
  if (static_cast<int>(coframe.size()) != a.dim)
    throw DimensionError("coframe_matches_algebra: size mismatch");
  for (int m = 1; m <= a.dim; ++m) {
    PolyForm lhs = d(coframe[static_cast<std::size_t>(m - 1)]);
    KForm dm = d1_of_basis(a, m);
    PolyForm rhs(lhs.coords, 2);
    for (const auto& [idx, c] : dm.terms) {
      PolyForm w = wedge(coframe[static_cast<std::size_t>(idx[0] - 1)],
                         coframe[static_cast<std::size_t>(idx[1] - 1)]);
      for (const auto& [widx, wc] : w.terms) rhs.add_term(widx, wc.scaled(c));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

PolyForm one_form(const std::vector<std::string>& coords,
                  std::vector<std::pair<int, PolyFunc>> components) {
  PolyForm f(coords, 1);
  for (auto& [i, c] : components) f.add_term({i}, std::move(c));
  return f;
}

}  // namespace lcs
