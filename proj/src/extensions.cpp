#include "lcs/extensions.hpp"

namespace lcs {

bool is_derivation(const LieAlgebra& a, const RatMatrix& d) {
  if (d.rows() != a.dim || d.cols() != a.dim)
    throw DimensionError("is_derivation: matrix shape mismatch");
  for (int i = 1; i <= a.dim; ++i) {
    for (int j = i + 1; j <= a.dim; ++j) {
      RatVector lhs = d * a.basis_bracket(i, j);
      RatVector rhs = a.bracket(d.col(i - 1), basis_vector(a.dim, j - 1)) +
                      a.bracket(basis_vector(a.dim, i - 1), d.col(j - 1));
      if (!vec_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

std::optional<RatVector> inner_witness(const LieAlgebra& a, const RatMatrix& d) {
  if (d.rows() != a.dim || d.cols() != a.dim)
    throw DimensionError("inner_witness: matrix shape mismatch");
  // ad_X as a linear function of X, stacked over all columns
  const int n = a.dim;
  RatMatrix sys = zero_matrix(static_cast<Eigen::Index>(n) * n, n);
  RatVector rhs = zero_vector(static_cast<Eigen::Index>(n) * n);
  for (int j = 0; j < n; ++j) {
    RatVector ej = basis_vector(n, j);
    for (int i = 0; i < n; ++i) {
      RatVector br = a.bracket(basis_vector(n, i), ej);  // ad_{e_i} e_j
      for (int k = 0; k < n; ++k) sys(static_cast<Eigen::Index>(j) * n + k, i) = br(k);
    }
    for (int k = 0; k < n; ++k) rhs(static_cast<Eigen::Index>(j) * n + k) = d(k, j);
  }
  return solve(sys, rhs);
}

bool is_contact_derivation(const LieAlgebra& a, const RatMatrix& d, const KForm& theta) {
  if (!is_derivation(a, d)) return false;
  RatVector th = form_to_vector(theta);
  for (int j = 0; j < a.dim; ++j) {
    Rational val(0);
    for (int k = 0; k < a.dim; ++k) val += th(k) * d(k, j);
    if (!val.is_zero()) return false;
  }
  return true;
}

bool is_symplectic_derivation(const LieAlgebra& a, const RatMatrix& d, const KForm& sigma) {
  if (!is_derivation(a, d)) return false;
  return dstar_form(sigma, d).is_zero();
}

KForm dstar_form(const KForm& tau, const RatMatrix& d) {
  if (tau.degree != 2) throw DimensionError("dstar_form: 2-form expected");
  if (d.rows() != tau.dim || d.cols() != tau.dim)
    throw DimensionError("dstar_form: matrix shape mismatch");
  RatMatrix t = two_form_matrix(tau);
  RatMatrix out = d.transpose() * t + t * d;
  return two_form_from_matrix(out);
}

KForm dstar_sigma(const LieAlgebra& a, const KForm& sigma, const RatMatrix& d) {
  KForm out = dstar_form(sigma, d);
  if (is_derivation(a, d) && !is_closed(a, out))
    throw Error("dstar_sigma: image of a derivation failed to be a cocycle");
  return out;
}

LieAlgebra semidirect_extend(const LieAlgebra& h, const RatMatrix& d) {
  if (!is_derivation(h, d)) throw NotDerivation("semidirect_extend: D is not a derivation");
  const int n = h.dim + 1;
  BracketMap br;
  for (const auto& [ij, c] : h.brackets) {
    RatVector ext = zero_vector(n);
    ext.head(h.dim) = c;
    br.emplace(ij, std::move(ext));
  }
  for (int i = 1; i <= h.dim; ++i) {
    RatVector col = d.col(i - 1);
    if (is_zero_vec(col)) continue;
    RatVector ext = zero_vector(n);
    ext.head(h.dim) = -col;  // [e_i, e_n] = -D e_i
    br.emplace(std::make_pair(i, n), std::move(ext));
  }
  return make_algebra(n, std::move(br));
}

LieAlgebra central_extend(const LieAlgebra& s, const KForm& sigma) {
  if (sigma.degree != 2 || sigma.dim != s.dim)
    throw DimensionError("central_extend: sigma must be a 2-form on the base");
  if (!is_closed(s, sigma)) throw NotCocycle("central_extend: d sigma != 0");
  const int n = s.dim + 1;
  RatMatrix sm = two_form_matrix(sigma);
  BracketMap br;
  for (int i = 1; i <= s.dim; ++i) {
    for (int j = i + 1; j <= s.dim; ++j) {
      RatVector c = zero_vector(n);
      c(0) = sm(i - 1, j - 1);
      RatVector base = s.basis_bracket(i, j);
      c.tail(s.dim) = base;
      if (!is_zero_vec(c)) br.emplace(std::make_pair(i + 1, j + 1), std::move(c));
    }
  }
  return make_algebra(n, std::move(br));
}

RatMatrix lift_derivation(const LieAlgebra& s, const KForm& sigma, const RatMatrix& ds) {
  if (!is_symplectic_derivation(s, ds, sigma))
    throw NotSymplecticDerivation("lift_derivation: D_s is not symplectic");
  const int n = s.dim + 1;
  RatMatrix d = zero_matrix(n, n);
  d.block(1, 1, s.dim, s.dim) = ds;
  LieAlgebra h = central_extend(s, sigma);
  if (!is_contact_derivation(h, d, basis_covector(n, 1)))
    throw Error("lift_derivation: lift failed the contact-derivation check");
  return d;
}

std::optional<RatMatrix> extract_symplectic_derivation(const LieAlgebra& h_ext,
                                                       const KForm& sigma,
                                                       const RatMatrix& d) {
  const int n = h_ext.dim;
  if (!is_contact_derivation(h_ext, d, basis_covector(n, 1))) return std::nullopt;
  // D(1, 0) must vanish (the Z = 0 conclusion)
  for (int k = 0; k < n; ++k)
    if (!d(k, 0).is_zero()) return std::nullopt;
  // first row is theta o D, already zero by the contact condition
  RatMatrix ds = d.block(1, 1, n - 1, n - 1);
  RatMatrix st = two_form_matrix(sigma);
  if (!is_zero_mat(RatMatrix(ds.transpose() * st + st * ds))) return std::nullopt;
  return ds;
}

LcsExtensionResult lcs_extension(const LieAlgebra& s, const KForm& sigma,
                                 const RatMatrix& ds) {
  SymplecticVerdict sv = verify_symplectic(s, sigma);
  if (!sv.ok()) throw Error("lcs_extension: base is not symplectic (" + sv.reason + ")");
  if (!is_symplectic_derivation(s, ds, sigma))
    throw NotSymplecticDerivation("lcs_extension: D_s is not symplectic");
  const int sd = s.dim;
  const int n = sd + 2;
  RatMatrix sm = two_form_matrix(sigma);
  BracketMap br;
  // [(a,X,a'),(b,Y,b')] = (sigma(X,Y), a' D Y - b' D X + [X,Y], 0)
  for (int i = 1; i <= sd; ++i) {
    for (int j = i + 1; j <= sd; ++j) {
      RatVector c = zero_vector(n);
      c(0) = sm(i - 1, j - 1);
      RatVector base = s.basis_bracket(i, j);
      for (int k = 0; k < sd; ++k) c(1 + k) = base(k);
      if (!is_zero_vec(c)) br.emplace(std::make_pair(i + 1, j + 1), std::move(c));
    }
  }
  for (int i = 1; i <= sd; ++i) {
    // [X-slot i, U] = -D e_i
    RatVector col = ds.col(i - 1);
    if (is_zero_vec(col)) continue;
    RatVector c = zero_vector(n);
    for (int k = 0; k < sd; ++k) c(1 + k) = -col(k);
    br.emplace(std::make_pair(i + 1, n), std::move(c));
  }
  LieAlgebra g = make_algebra(n, std::move(br));
  KForm omega = basis_covector(n, n);
  KForm eta = basis_covector(n, 1);
  LcsResult res = verify_lcs_first_kind(g, omega, eta);
  if (!res.ok())
    throw Error("lcs_extension: construction failed verification (" + res.reason + ")");
  // central Lee vector V = (1, 0, 0)
  if (!vec_equal(res.structure->lee, basis_vector(n, 0)))
    throw Error("lcs_extension: Lee vector is not the central slot");
  return LcsExtensionResult{std::move(g), std::move(*res.structure)};
}

DoubleExtensionResult double_extension(const DoubleExtensionData& data) {
  const LieAlgebra& s1 = data.s1;
  SymplecticVerdict sv = verify_symplectic(s1, data.sigma1);
  if (!sv.ok()) throw Error("double_extension: base is not symplectic (" + sv.reason + ")");
  if (!is_derivation(s1, data.deriv))
    throw NotDerivation("double_extension: D is not a derivation");
  if (data.z1.size() != s1.dim)
    throw DimensionError("double_extension: Z1 length mismatch");
  // compatibility: d(i_Z1 sigma1) = -(D*)^2 sigma1
  KForm dstar1 = dstar_form(data.sigma1, data.deriv);
  KForm dstar2 = dstar_form(dstar1, data.deriv);
  KForm residual = ce_differential(s1, interior(data.z1, data.sigma1)) + dstar2;
  if (!residual.is_zero()) throw CompatibilityFailed(std::move(residual));

  const int sd = s1.dim;
  const int n = sd + 2;
  RatMatrix sm = two_form_matrix(data.sigma1);
  RatMatrix dstar1m = two_form_matrix(dstar1);
  RatVector iz = RatVector(sm.transpose() * data.z1);  // i_Z1 sigma1 as covector: sigma1(Z1, .)
  BracketMap br;
  // [(a,X,a'),(b,Y,b')] = ((D*s)(X,Y) - a' s(Z,Y) + b' s(Z,X), -a' D Y + b' D X + [X,Y], 0)
  for (int i = 1; i <= sd; ++i) {
    for (int j = i + 1; j <= sd; ++j) {
      RatVector c = zero_vector(n);
      c(0) = dstar1m(i - 1, j - 1);
      RatVector base = s1.basis_bracket(i, j);
      for (int k = 0; k < sd; ++k) c(1 + k) = base(k);
      if (!is_zero_vec(c)) br.emplace(std::make_pair(i + 1, j + 1), std::move(c));
    }
  }
  for (int i = 1; i <= sd; ++i) {
    // [X-slot i, a'-slot] with X = e_i, b' = 1: (sigma1(Z1, e_i), +D e_i, 0)
    RatVector c = zero_vector(n);
    c(0) = iz(i - 1);
    for (int k = 0; k < sd; ++k) c(1 + k) = data.deriv(k, i - 1);
    if (!is_zero_vec(c)) br.emplace(std::make_pair(i + 1, n), std::move(c));
  }
  LieAlgebra s = make_algebra(n, std::move(br));
  // sigma = e^1 ^ e^n + shifted sigma1
  KForm sigma(n, 2);
  sigma.add_term({1, n}, Rational(1));
  for (const auto& [idx, c] : data.sigma1.terms)
    sigma.add_term({idx[0] + 1, idx[1] + 1}, c);
  SymplecticVerdict out_v = verify_symplectic(s, sigma);
  if (!out_v.ok())
    throw Error("double_extension: output failed verification (" + out_v.reason + ")");
  return DoubleExtensionResult{std::move(s), std::move(sigma)};
}

LcsExtensionExtract extract_lcs_extension(const LieAlgebra& g, const LcsStructure& s) {
  SplitResult split = split_to_contact(g, s);
  const LieAlgebra& h = split.h;
  const int hd = h.dim;
  // the Lee vector is the Reeb vector of h; it must be central in h
  auto r_in_h = solve(split.h_embedding, s.lee);
  if (!r_in_h || !vec_equal(split.h_embedding * *r_in_h, s.lee))
    throw Error("extract_lcs_extension: Lee vector does not lie in ker omega");
  RatVector r = *r_in_h;
  if (!is_zero_vec(h.ad(r)))
    throw Error("extract_lcs_extension: Lee vector is not central in ker omega");
  // complement of <R> inside h with theta(c_i) = 0: c_i = e_i - theta(e_i) R,
  // taking the h-basis vectors independent from R
  RatVector th = form_to_vector(split.contact.theta);
  std::vector<RatVector> comp;
  RatMatrix chosen = zero_matrix(hd, 0);
  {
    std::vector<RatVector> cols{r};
    for (int i = 0; i < hd && static_cast<int>(cols.size()) < hd; ++i) {
      RatVector cand = basis_vector(hd, i);
      std::vector<RatVector> trial = cols;
      trial.push_back(cand);
      if (rank(columns(trial, hd)) == static_cast<Eigen::Index>(trial.size())) cols = trial;
    }
    for (std::size_t i = 1; i < cols.size(); ++i) {
      RatVector c = cols[i];
      Rational tval(0);
      for (int k = 0; k < hd; ++k) tval += th(k) * c(k);
      // normalize theta(R) = 1, so subtract tval * R
      c = c - tval * r;
      comp.push_back(c);
    }
    chosen = columns(comp, hd);
  }
  const int sd = hd - 1;
  // base brackets: [c_i, c_j] = sigma(i,j) R + lift of [ , ]_s
  RatMatrix full = zero_matrix(hd, sd + 1);
  full.col(0) = r;
  for (int i = 0; i < sd; ++i) full.col(i + 1) = chosen.col(i);
  BracketMap sbr;
  RatMatrix sigma_m = zero_matrix(sd, sd);
  for (int i = 1; i <= sd; ++i) {
    for (int j = i + 1; j <= sd; ++j) {
      RatVector big = h.bracket(chosen.col(i - 1), chosen.col(j - 1));
      auto coords = solve(full, big);
      if (!coords) throw Error("extract_lcs_extension: bracket decomposition failed");
      sigma_m(i - 1, j - 1) = (*coords)(0);
      sigma_m(j - 1, i - 1) = -(*coords)(0);
      RatVector base = coords->tail(sd);
      if (!is_zero_vec(base)) sbr.emplace(std::make_pair(i, j), base);
    }
  }
  LieAlgebra sbase = make_algebra(sd, std::move(sbr));
  KForm sigma = two_form_from_matrix(sigma_m);
  SymplecticVerdict sv = verify_symplectic(sbase, sigma);
  if (!sv.ok())
    throw Error("extract_lcs_extension: quotient form is not symplectic (" + sv.reason + ")");
  // D_s from ad_U via the contact derivation
  RatMatrix ds = zero_matrix(sd, sd);
  for (int j = 0; j < sd; ++j) {
    RatVector img = split.deriv.matrix * chosen.col(j);
    auto coords = solve(full, img);
    if (!coords) throw Error("extract_lcs_extension: derivation decomposition failed");
    if (!(*coords)(0).is_zero())
      throw Error("extract_lcs_extension: derivation has a Reeb component");
    ds.col(j) = coords->tail(sd);
  }
  if (!is_symplectic_derivation(sbase, ds, sigma))
    throw Error("extract_lcs_extension: extracted derivation is not symplectic");
  // adapted basis in g: (V, complement, U)
  RatMatrix basis = zero_matrix(g.dim, g.dim);
  basis.col(0) = s.lee;
  for (int i = 0; i < sd; ++i) basis.col(i + 1) = split.h_embedding * chosen.col(i);
  basis.col(g.dim - 1) = s.anti_lee;
  return LcsExtensionExtract{std::move(sbase), std::move(sigma), std::move(ds),
                             std::move(basis)};
}

}  // namespace lcs
