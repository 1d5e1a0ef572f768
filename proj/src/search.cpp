#include "lcs/search.hpp"

#include <cstdlib>
#include <random>

#include "lcs/nilpotent.hpp"

namespace lcs {

std::string impossible_reason_str(ImpossibleReason r) {
  switch (r) {
    case ImpossibleReason::PfaffianIdenticallyZero: return "PfaffianIdenticallyZero";
    case ImpossibleReason::FilterObstruction: return "FilterObstruction";
    case ImpossibleReason::CenterObstruction: return "CenterObstruction";
    case ImpossibleReason::ContactPolynomialZero: return "ContactPolynomialZero";
  }
  return "?";
}

SearchConfig default_search_config() {
  SearchConfig cfg;
  if (const char* env = std::getenv("LCS_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') cfg.seed = v;
  }
  return cfg;
}

namespace {

Rational random_rational(std::mt19937_64& rng, int num_bound, int max_den) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

SparsePoly symplectic_pfaffian(const LieAlgebra& a) {
  CohomologyReport rep = betti_numbers(a, std::nullopt);
  const auto& z2 = rep.cocycle_bases[2];
  std::vector<RatMatrix> family;
  family.reserve(z2.size());
  for (const KForm& f : z2) family.push_back(two_form_matrix(f));
  return pfaffian_generic(family);
}

ExistenceVerdict symplectic_exists(const LieAlgebra& a, const SearchConfig& cfg) {
  if (a.dim % 2 != 0) throw DimensionError("symplectic_exists: odd dimension");
  if (a.dim > 12) throw DimensionError("symplectic_exists: dimension cap is 12");
  ExistenceVerdict v;
  CohomologyReport rep = betti_numbers(a, std::nullopt);
  const auto& z2 = rep.cocycle_bases[2];
  std::vector<RatMatrix> family;
  for (const KForm& f : z2) family.push_back(two_form_matrix(f));
  SparsePoly pf = pfaffian_generic(family);
  if (pf.is_zero()) {
    v.outcome = ExistenceVerdict::Outcome::ProvedImpossible;
    v.reason = ImpossibleReason::PfaffianIdenticallyZero;
    return v;
  }
  // witness: basis cocycles and small combinations first, then random
  // rational points; every candidate is re-verified exactly.
  auto try_point = [&](const std::vector<Rational>& t) -> bool {
    KForm sigma(a.dim, 2);
    for (std::size_t i = 0; i < z2.size(); ++i)
      sigma = sigma + scale(z2[i], t[i]);
    if (verify_symplectic(a, sigma).ok()) {
      v.outcome = ExistenceVerdict::Outcome::Exists;
      v.symplectic_cert = sigma;
      return true;
    }
    return false;
  };
  std::vector<Rational> t(z2.size(), Rational(0));
  for (std::size_t i = 0; i < z2.size(); ++i) {
    t.assign(z2.size(), Rational(0));
    t[i] = Rational(1);
    if (try_point(t)) return v;
  }
  std::mt19937_64 rng(cfg.seed);
  // a nonzero polynomial over Q cannot vanish on enough random points;
  // in practice the first few tries land off the zero locus
  for (int iter = 0; iter < 4096; ++iter) {
    for (std::size_t i = 0; i < z2.size(); ++i)
      t[i] = random_rational(rng, 8, 8);
    if (try_point(t)) return v;
  }
  v.outcome = ExistenceVerdict::Outcome::NoCertificateFound;
  return v;
}

SparsePoly contact_polynomial(const LieAlgebra& a) {
  if (a.dim % 2 == 0) throw DimensionError("contact_polynomial: even dimension");
  const int n = (a.dim + 1) / 2;
  PolyCoeffForm theta(a.dim, 1);
  PolyCoeffForm dtheta(a.dim, 2);
  for (int i = 1; i <= a.dim; ++i) {
    SparsePoly ui = SparsePoly::variable("u" + std::to_string(i));
    theta.add_term({i}, ui);
    KForm di = d1_of_basis(a, i);
    for (const auto& [idx, c] : di.terms) dtheta.add_term(idx, ui.scaled(c));
  }
  PolyCoeffForm vol = wedge(theta, wedge_pow(dtheta, n - 1));
  return top_coefficient(vol);
}

ExistenceVerdict contact_exists(const LieAlgebra& a, const SearchConfig& cfg) {
  if (a.dim % 2 == 0) throw DimensionError("contact_exists: even dimension");
  ExistenceVerdict v;
  bool nilp = is_nilpotent(a);
  if (nilp && center(a).size() != 1) {
    v.outcome = ExistenceVerdict::Outcome::ProvedImpossible;
    v.reason = ImpossibleReason::CenterObstruction;
    return v;
  }
  SparsePoly poly = contact_polynomial(a);
  if (poly.is_zero()) {
    v.outcome = ExistenceVerdict::Outcome::ProvedImpossible;
    v.reason = ImpossibleReason::ContactPolynomialZero;
    return v;
  }
  auto try_theta = [&](const RatVector& u) -> bool {
    KForm theta = vector_to_form(u, a.dim, 1);
    ContactResult res = verify_contact(a, theta);
    if (res.ok()) {
      v.outcome = ExistenceVerdict::Outcome::Exists;
      v.contact_cert = std::move(res.structure);
      return true;
    }
    return false;
  };
  for (int i = 0; i < a.dim; ++i)
    if (try_theta(basis_vector(a.dim, i))) return v;
  std::mt19937_64 rng(cfg.seed);
  for (int iter = 0; iter < 4096; ++iter) {
    RatVector u = zero_vector(a.dim);
    for (int i = 0; i < a.dim; ++i) u(i) = random_rational(rng, 8, 8);
    if (try_theta(u)) return v;
  }
  v.outcome = ExistenceVerdict::Outcome::NoCertificateFound;
  return v;
}

namespace {

/// Contact witnesses on an algebra, up to `count` many, deterministic from
/// the seed. Basis covectors first, then random rational points on the
/// non-vanishing locus.
std::vector<ContactStructure> contact_witnesses(const LieAlgebra& h, int count,
                                                std::uint64_t seed) {
  std::vector<ContactStructure> out;
  auto push = [&](const KForm& theta) {
    ContactResult res = verify_contact(h, theta);
    if (!res.ok()) return;
    for (const ContactStructure& s : out)
      if (s.theta == res.structure->theta) return;
    out.push_back(std::move(*res.structure));
  };
  for (int i = 0; i < h.dim && static_cast<int>(out.size()) < count; ++i)
    push(basis_covector(h.dim, i + 1));
  std::mt19937_64 rng(seed);
  for (int iter = 0; iter < 64 * count && static_cast<int>(out.size()) < count; ++iter) {
    RatVector u = zero_vector(h.dim);
    for (int i = 0; i < h.dim; ++i) u(i) = random_rational(rng, 4, 4);
    push(vector_to_form(u, h.dim, 1));
  }
  return out;
}

struct OmegaCandidates {
  std::vector<RatVector> list;  // coordinates in the closed-form basis
};

}  // namespace

ExistenceVerdict lcs_first_kind_search(const LieAlgebra& a, const SearchConfig& cfg) {
  if (a.dim % 2 != 0 || a.dim < 4)
    throw DimensionError("lcs_first_kind_search: dimension must be even and >= 4");
  ExistenceVerdict v;
  bool nilp = is_nilpotent(a);
  if (nilp) {
    FiltrationVerdict f = lcs_filtration_obstruction(a);
    if (f == FiltrationVerdict::AbelianNoLcs) {
      // ker omega is abelian of dimension 2n-1 for every omega, so its
      // center can never be a line
      v.outcome = ExistenceVerdict::Outcome::ProvedImpossible;
      v.reason = ImpossibleReason::CenterObstruction;
      return v;
    }
    if (f == FiltrationVerdict::ObstructedFmTooBig) {
      v.outcome = ExistenceVerdict::Outcome::ProvedImpossible;
      v.reason = ImpossibleReason::FilterObstruction;
      return v;
    }
  }
  // candidate omegas live in ker(d1)
  RatMatrix d1 = differential_matrix(a, 1, nullptr);
  std::vector<RatVector> closed = kernel_basis(d1);
  if (closed.empty()) {
    v.outcome = ExistenceVerdict::Outcome::NoCertificateFound;
    return v;
  }
  const int m = static_cast<int>(closed.size());
  std::vector<RatVector> candidates;
  for (const RatVector& w : closed) candidates.push_back(w);
  {
    // integer grid, first nonzero coefficient positive to kill duplicates
    std::vector<int> idx(static_cast<std::size_t>(m), -cfg.omega_bound);
    bool done = false;
    while (!done) {
      bool all_zero = true, leading_neg = false, seen_nonzero = false;
      for (int i = 0; i < m; ++i) {
        if (idx[static_cast<std::size_t>(i)] != 0) {
          if (!seen_nonzero && idx[static_cast<std::size_t>(i)] < 0) leading_neg = true;
          seen_nonzero = true;
          all_zero = false;
        }
      }
      if (!all_zero && !leading_neg) {
        RatVector w = zero_vector(a.dim);
        for (int i = 0; i < m; ++i)
          w = w + Rational(idx[static_cast<std::size_t>(i)]) * closed[static_cast<std::size_t>(i)];
        candidates.push_back(w);
        if (candidates.size() >= static_cast<std::size_t>(4 * cfg.budget)) break;
      }
      int pos = m - 1;
      while (pos >= 0) {
        if (++idx[static_cast<std::size_t>(pos)] <= cfg.omega_bound) break;
        idx[static_cast<std::size_t>(pos)] = -cfg.omega_bound;
        --pos;
      }
      if (pos < 0) done = true;
    }
  }
  std::mt19937_64 rng(cfg.seed);
  while (static_cast<int>(candidates.size()) < 4 * cfg.budget) {
    RatVector w = zero_vector(a.dim);
    for (const RatVector& base : closed) w = w + random_rational(rng, 8, 8) * base;
    candidates.push_back(w);
  }

  int trials = 0;
  for (const RatVector& w : candidates) {
    if (trials >= cfg.budget) break;
    if (is_zero_vec(w)) continue;
    KForm omega = vector_to_form(w, a.dim, 1);
    ++trials;
    TrialEntry entry;
    entry.index = trials;
    entry.omega = form_str(omega);
    // h = ker omega
    RatMatrix om_row = zero_matrix(1, a.dim);
    for (int c = 0; c < a.dim; ++c) om_row(0, c) = w(c);
    RatMatrix emb = columns(kernel_basis(om_row), a.dim);
    const int hd = static_cast<int>(emb.cols());
    bool ok = true;
    BracketMap br;
    for (int i = 1; i <= hd && ok; ++i) {
      for (int j = i + 1; j <= hd && ok; ++j) {
        RatVector big = a.bracket(emb.col(i - 1), emb.col(j - 1));
        auto small = solve(emb, big);
        if (!small) ok = false;  // cannot happen for closed omega
        else br.emplace(std::make_pair(i, j), *small);
      }
    }
    if (!ok) {
      entry.outcome = "ker omega is not a subalgebra";
      v.log.push_back(entry);
      continue;
    }
    LieAlgebra h = make_algebra(hd, std::move(br));
    if (is_nilpotent(h) && center(h).size() != 1) {
      entry.outcome = "center obstruction on ker omega";
      v.log.push_back(entry);
      continue;
    }
    SparsePoly cpoly = contact_polynomial(h);
    if (cpoly.is_zero()) {
      entry.outcome = "no contact form on ker omega";
      v.log.push_back(entry);
      continue;
    }
    std::vector<ContactStructure> thetas = contact_witnesses(h, cfg.theta_retries, cfg.seed);
    bool found = false;
    for (const ContactStructure& th : thetas) {
      // eta on g: eta(emb_j) = theta_j, eta(U) = 0 once U is known.
      // U solves omega(U) = 1, theta([U, X]) = 0 for X in h.
      RatMatrix sys = zero_matrix(hd + 1, a.dim);
      RatVector rhs = zero_vector(hd + 1);
      RatVector th_vec = form_to_vector(th.theta);
      for (int col = 0; col < a.dim; ++col) {
        RatVector ecol = basis_vector(a.dim, col);
        for (int r = 0; r < hd; ++r) {
          RatVector br_big = a.bracket(ecol, emb.col(r));
          auto small = solve(emb, br_big);
          if (!small) { continue; }  // [g,g] in ker omega, always solvable
          Rational val(0);
          for (int k = 0; k < hd; ++k) val += th_vec(k) * (*small)(k);
          sys(r, col) = val;
        }
        sys(hd, col) = w(col);
      }
      rhs(hd) = Rational(1);
      auto u = solve(sys, rhs);
      if (!u) continue;
      // eta: extends theta by eta(U) = 0; solve eta on the basis (emb, U)
      RatMatrix basis = zero_matrix(a.dim, a.dim);
      basis.block(0, 0, a.dim, hd) = emb;
      basis.col(hd) = *u;
      auto binv = inverse(basis);
      if (!binv) continue;
      RatVector eta_coords = zero_vector(a.dim);
      for (int c = 0; c < a.dim; ++c) {
        Rational val(0);
        for (int r = 0; r < hd; ++r) val += th_vec(r) * (*binv)(r, c);
        eta_coords(c) = val;
      }
      KForm eta = vector_to_form(eta_coords, a.dim, 1);
      LcsResult res = verify_lcs_first_kind(a, omega, eta);
      if (res.ok()) {
        v.outcome = ExistenceVerdict::Outcome::Exists;
        v.lcs_cert = std::make_pair(omega, eta);
        entry.outcome = "certificate found";
        v.log.push_back(entry);
        found = true;
        break;
      }
    }
    if (found) return v;
    entry.outcome = thetas.empty() ? "no contact witness realized"
                                   : "anti-Lee solve failed for all witnesses";
    v.log.push_back(entry);
  }
  v.outcome = ExistenceVerdict::Outcome::NoCertificateFound;
  return v;
}

}  // namespace lcs
