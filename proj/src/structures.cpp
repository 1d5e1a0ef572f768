#include "lcs/structures.hpp"

namespace lcs {

std::string kind_str(Kind k) {
  return k == Kind::FirstKind ? "first kind" : "second kind";
}

SymplecticVerdict verify_symplectic(const LieAlgebra& a, const KForm& sigma) {
  if (a.dim % 2 != 0) throw DimensionError("verify_symplectic: odd dimension");
  if (sigma.degree != 2 || sigma.dim != a.dim)
    throw DimensionError("verify_symplectic: sigma must be a 2-form on the algebra");
  SymplecticVerdict v;
  v.closed = ce_differential(a, sigma).is_zero();
  v.nondegenerate = !top_coefficient(wedge_pow(sigma, a.dim / 2)).is_zero();
  if (!v.closed) v.reason = "d sigma != 0";
  if (!v.nondegenerate) v.reason += std::string(v.reason.empty() ? "" : "; ") + "sigma^n = 0";
  return v;
}

ContactResult verify_contact(const LieAlgebra& a, const KForm& theta) {
  if (a.dim % 2 == 0) throw DimensionError("verify_contact: even dimension");
  if (theta.degree != 1 || theta.dim != a.dim)
    throw DimensionError("verify_contact: theta must be a 1-form on the algebra");
  ContactResult res;
  const int n = (a.dim + 1) / 2;
  KForm dtheta = ce_differential(a, theta);
  KForm vol = wedge(theta, wedge_pow(dtheta, n - 1));
  if (top_coefficient(vol).is_zero()) {
    res.reason = "theta ^ (d theta)^(n-1) = 0";
    return res;
  }
  // Reeb: i_R d theta = 0 and theta(R) = 1 (unique for a contact form)
  RatMatrix sys = zero_matrix(a.dim + 1, a.dim);
  RatVector rhs = zero_vector(a.dim + 1);
  RatMatrix dt = two_form_matrix(dtheta);
  for (int r = 0; r < a.dim; ++r)
    for (int c = 0; c < a.dim; ++c) sys(r, c) = dt(r, c);
  RatVector th = form_to_vector(theta);
  for (int c = 0; c < a.dim; ++c) sys(a.dim, c) = th(c);
  rhs(a.dim) = Rational(1);
  auto reeb = solve(sys, rhs);
  if (!reeb) {
    res.reason = "Reeb system inconsistent";
    return res;
  }
  res.structure = ContactStructure{theta, *reeb};
  return res;
}

namespace {

// Solve omega(X) = w, eta(X) = e, i_X d eta = 0.
std::optional<RatVector> solve_marked_vector(const LieAlgebra& a, const KForm& omega,
                                             const KForm& eta, const KForm& deta,
                                             const Rational& w, const Rational& e) {
  RatMatrix sys = zero_matrix(a.dim + 2, a.dim);
  RatVector rhs = zero_vector(a.dim + 2);
  RatMatrix dm = two_form_matrix(deta);
  for (int r = 0; r < a.dim; ++r)
    for (int c = 0; c < a.dim; ++c) sys(r, c) = dm(r, c);
  RatVector om = form_to_vector(omega), et = form_to_vector(eta);
  for (int c = 0; c < a.dim; ++c) {
    sys(a.dim, c) = om(c);
    sys(a.dim + 1, c) = et(c);
  }
  rhs(a.dim) = w;
  rhs(a.dim + 1) = e;
  return solve(sys, rhs);
}

Eigen::Index two_form_rank(const KForm& f) { return rank(two_form_matrix(f)); }

}  // namespace

LcsResult verify_lcs_first_kind(const LieAlgebra& a, const KForm& omega, const KForm& eta) {
  if (a.dim % 2 != 0 || a.dim < 4)
    throw DimensionError("verify_lcs_first_kind: dimension must be even and >= 4");
  if (omega.degree != 1 || eta.degree != 1 || omega.dim != a.dim || eta.dim != a.dim)
    throw DimensionError("verify_lcs_first_kind: certificate must be two 1-forms");
  LcsResult res;
  const int n = a.dim / 2;
  if (!is_closed(a, omega)) {
    res.reason = "d omega != 0";
    return res;
  }
  KForm deta = ce_differential(a, eta);
  if (two_form_rank(deta) >= a.dim) {
    res.reason = "rank(d eta) = 2n";
    return res;
  }
  KForm vol = wedge(omega, wedge(eta, wedge_pow(deta, n - 1)));
  if (top_coefficient(vol).is_zero()) {
    res.reason = "omega ^ eta ^ (d eta)^(n-1) = 0";
    return res;
  }
  auto u = solve_marked_vector(a, omega, eta, deta, Rational(1), Rational(0));
  auto v = solve_marked_vector(a, omega, eta, deta, Rational(0), Rational(1));
  if (!u || !v) {
    res.reason = "anti-Lee/Lee system inconsistent";
    return res;
  }
  RatVector uv = a.bracket(*u, *v);
  for (int k = 0; k < a.dim; ++k) {
    if (!uv(k).is_zero()) {
      res.reason = "[U, V] != 0";
      return res;
    }
  }
  KForm phi = deta - wedge(omega, eta);
  if (ce_differential(a, phi) != wedge(omega, phi)) {
    res.reason = "d Phi != omega ^ Phi";
    return res;
  }
  if (top_coefficient(wedge_pow(phi, n)).is_zero()) {
    res.reason = "Phi^n = 0";
    return res;
  }
  LcsStructure s;
  s.omega = omega;
  s.eta = eta;
  s.phi = phi;
  s.anti_lee = *u;
  s.lee = *v;
  s.kind = Kind::FirstKind;
  s.exact = true;  // Phi = d_omega eta by construction
  res.structure = std::move(s);
  return res;
}

AutomorphismReport classify_kind(const LieAlgebra& a, const KForm& phi, const KForm& omega) {
  if (a.dim % 2 != 0) throw NotLcs("classify_kind: odd dimension");
  if (!is_closed(a, omega)) throw NotLcs("classify_kind: d omega != 0");
  if (ce_differential(a, phi) != wedge(omega, phi))
    throw NotLcs("classify_kind: d phi != omega ^ phi");
  if (top_coefficient(wedge_pow(phi, a.dim / 2)).is_zero())
    throw NotLcs("classify_kind: phi is degenerate");
  // kernel of X -> L_X phi
  Eigen::Index rows = static_cast<Eigen::Index>(monomial_basis(a.dim, 2).size());
  RatMatrix m = zero_matrix(rows, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    KForm lx = lie_derivative(a, basis_vector(a.dim, i), phi);
    m.col(i) = form_to_vector(lx);
  }
  AutomorphismReport rep;
  rep.basis = kernel_basis(m);
  RatVector om = form_to_vector(omega);
  bool surjective = false;
  for (const RatVector& x : rep.basis) {
    Rational val(0);
    for (int k = 0; k < a.dim; ++k) val += om(k) * x(k);
    if (!val.is_zero()) surjective = true;
    rep.lee_values.push_back(val);
  }
  rep.kind = surjective ? Kind::FirstKind : Kind::SecondKind;
  return rep;
}

SplitResult split_to_contact(const LieAlgebra& a, const LcsStructure& s) {
  // h = ker omega; well-defined brackets require [g, g] inside h
  RatMatrix om_row = zero_matrix(1, a.dim);
  RatVector om = form_to_vector(s.omega);
  for (int c = 0; c < a.dim; ++c) om_row(0, c) = om(c);
  std::vector<RatVector> hb = kernel_basis(om_row);
  RatMatrix emb = columns(hb, a.dim);
  const int hd = static_cast<int>(hb.size());
  for (const auto& [ij, c] : a.brackets) {
    Rational val(0);
    for (int k = 0; k < a.dim; ++k) val += om(k) * c(k);
    if (!val.is_zero()) throw Error("split_to_contact: [g,g] is not contained in ker omega");
  }
  BracketMap br;
  for (int i = 1; i <= hd; ++i) {
    for (int j = i + 1; j <= hd; ++j) {
      RatVector big = a.bracket(emb.col(i - 1), emb.col(j - 1));
      auto small = solve(emb, big);
      if (!small) throw Error("split_to_contact: bracket left ker omega");
      br.emplace(std::make_pair(i, j), *small);
    }
  }
  LieAlgebra h = make_algebra(hd, std::move(br));
  // theta = eta restricted to h
  KForm theta(hd, 1);
  RatVector et = form_to_vector(s.eta);
  for (int i = 1; i <= hd; ++i) {
    Rational val(0);
    for (int k = 0; k < a.dim; ++k) val += et(k) * emb(k, i - 1);
    if (!val.is_zero()) theta.terms.emplace(FormIndex{i}, val);
  }
  ContactResult contact = verify_contact(h, theta);
  if (!contact.ok())
    throw Error("split_to_contact: restriction is not contact (" + contact.reason + ")");
  // D = ad_U restricted to h, expressed in the h basis
  RatMatrix d = zero_matrix(hd, hd);
  for (int j = 0; j < hd; ++j) {
    RatVector img = a.bracket(s.anti_lee, emb.col(j));
    auto small = solve(emb, img);
    if (!small) throw Error("split_to_contact: ad_U does not preserve ker omega");
    d.col(j) = *small;
  }
  SplitResult out{std::move(h), std::move(*contact.structure), Derivation{std::move(d)},
                  std::move(emb), s.anti_lee};
  return out;
}

JoinResult join_from_contact(const LieAlgebra& h, const ContactStructure& contact,
                             const Derivation& d) {
  const int hd = h.dim;
  const int n = hd + 1;
  if (d.matrix.rows() != hd || d.matrix.cols() != hd)
    throw DimensionError("join_from_contact: derivation shape mismatch");
  // contact derivation check: D a derivation with theta o D = 0
  RatVector th = form_to_vector(contact.theta);
  for (int j = 0; j < hd; ++j) {
    Rational val(0);
    for (int k = 0; k < hd; ++k) val += th(k) * d.matrix(k, j);
    if (!val.is_zero()) throw NotContactDerivation("join_from_contact: theta o D != 0");
  }
  for (int i = 1; i <= hd; ++i) {
    for (int j = i + 1; j <= hd; ++j) {
      RatVector lhs = d.matrix * h.basis_bracket(i, j);
      RatVector rhs = h.bracket(d.matrix.col(i - 1), basis_vector(hd, j - 1)) +
                      h.bracket(basis_vector(hd, i - 1), d.matrix.col(j - 1));
      if (!vec_equal(lhs, rhs)) throw NotDerivation("join_from_contact: D is not a derivation");
    }
  }
  BracketMap br;
  for (const auto& [ij, c] : h.brackets) {
    RatVector ext = zero_vector(n);
    ext.head(hd) = c;
    br.emplace(ij, std::move(ext));
  }
  // [e_n, X] = D X, stored as [X, e_n] = -D X
  for (int i = 1; i <= hd; ++i) {
    RatVector ext = zero_vector(n);
    ext.head(hd) = -d.matrix.col(i - 1);
    br.emplace(std::make_pair(i, n), std::move(ext));
  }
  LieAlgebra g = make_algebra(n, std::move(br));
  KForm omega = basis_covector(n, n);
  KForm eta(n, 1);
  for (const auto& [idx, c] : contact.theta.terms) eta.terms.emplace(idx, c);
  LcsResult res = verify_lcs_first_kind(g, omega, eta);
  if (!res.ok())
    throw Error("join_from_contact: construction failed verification (" + res.reason + ")");
  return JoinResult{std::move(g), std::move(*res.structure)};
}

ComplexVerdict check_complex_structure(const LieAlgebra& a, const RatMatrix& j) {
  if (j.rows() != a.dim || j.cols() != a.dim)
    throw DimensionError("check_complex_structure: J shape mismatch");
  RatMatrix j2 = j * j;
  for (int r = 0; r < a.dim; ++r)
    for (int c = 0; c < a.dim; ++c)
      if (j2(r, c) != (r == c ? Rational(-1) : Rational(0)))
        throw NotAlmostComplex("check_complex_structure: J^2 != -Id");
  ComplexVerdict v;
  for (int p = 0; p < a.dim; ++p) {
    RatVector x = basis_vector(a.dim, p);
    for (int q = p + 1; q < a.dim; ++q) {
      RatVector y = basis_vector(a.dim, q);
      RatVector nij = a.bracket(j * x, j * y) - j * a.bracket(j * x, y) -
                      j * a.bracket(x, j * y) - a.bracket(x, y);
      for (int k = 0; k < a.dim; ++k) {
        if (!nij(k).is_zero()) {
          v.ok = false;
          v.reason = "N_J(e" + std::to_string(p + 1) + ", e" + std::to_string(q + 1) +
                     ") != 0";
          return v;
        }
      }
    }
  }
  v.ok = true;
  return v;
}

}  // namespace lcs
