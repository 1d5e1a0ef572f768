#include "lcs/cohomology.hpp"

#include "lcs/nilpotent.hpp"

namespace lcs {

int CohomologyReport::euler_characteristic() const {
  int chi = 0, sign = 1;
  for (int b : betti) {
    chi += sign * b;
    sign = -sign;
  }
  return chi;
}

bool is_closed(const LieAlgebra& a, const KForm& f) {
  return ce_differential(a, f).is_zero();
}

KForm twisted_differential(const LieAlgebra& a, const KForm& f, const KForm& omega) {
  if (omega.degree != 1) throw DimensionError("twisted_differential: twist must be a 1-form");
  if (!is_closed(a, omega)) throw NotClosedTwist("twisted_differential: d omega != 0");
  return ce_differential(a, f) - wedge(omega, f);
}

RatMatrix differential_matrix(const LieAlgebra& a, int degree, const KForm* twist) {
  const int n = a.dim;
  std::vector<FormIndex> dom = monomial_basis(n, degree);
  std::vector<FormIndex> cod = monomial_basis(n, degree + 1);
  std::size_t dom_size = (degree == 0) ? 1 : dom.size();
  RatMatrix m = zero_matrix(static_cast<Eigen::Index>(cod.size()),
                            static_cast<Eigen::Index>(dom_size));
  auto column_of = [&](const KForm& img, Eigen::Index col) {
    RatVector v = form_to_vector(img);
    for (Eigen::Index r = 0; r < v.size(); ++r) m(r, col) = v(r);
  };
  if (degree == 0) {
    // d of the constant function 1 is 0; d_omega(1) = -omega.
    KForm one(n, 0);
    one.add_term({}, Rational(1));
    KForm img = twist ? (ce_differential(a, one) - wedge(*twist, one))
                      : ce_differential(a, one);
    column_of(img, 0);
    return m;
  }
  for (std::size_t j = 0; j < dom.size(); ++j) {
    KForm mono(n, degree);
    mono.terms.emplace(dom[j], Rational(1));
    KForm img = twist ? (ce_differential(a, mono) - wedge(*twist, mono))
                      : ce_differential(a, mono);
    column_of(img, static_cast<Eigen::Index>(j));
  }
  return m;
}

CohomologyReport betti_numbers(const LieAlgebra& a, std::optional<KForm> twist) {
  if (twist && twist->degree != 1)
    throw DimensionError("betti_numbers: twist must be a 1-form");
  if (twist && !is_closed(a, *twist)) throw NotClosedTwist("betti_numbers: d omega != 0");
  const KForm* tw = twist ? &*twist : nullptr;
  const int n = a.dim;

  CohomologyReport rep;
  rep.dim = n;
  rep.twist = twist;
  rep.cocycle_bases.resize(static_cast<std::size_t>(n) + 1);
  rep.coboundary_bases.resize(static_cast<std::size_t>(n) + 1);

  std::vector<RatMatrix> mats;
  mats.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) mats.push_back(differential_matrix(a, k, tw));

  for (int k = 0; k <= n; ++k) {
    // cocycles in degree k
    std::vector<RatVector> ker = kernel_basis(mats[static_cast<std::size_t>(k)]);
    for (const RatVector& v : ker) {
      if (k == 0) {
        KForm c(n, 0);
        c.add_term({}, v(0));
        rep.cocycle_bases[static_cast<std::size_t>(k)].push_back(c);
      } else {
        rep.cocycle_bases[static_cast<std::size_t>(k)].push_back(vector_to_form(v, n, k));
      }
    }
    // coboundaries in degree k
    if (k > 0) {
      RatMatrix img = column_space_basis(mats[static_cast<std::size_t>(k) - 1]);
      for (Eigen::Index c = 0; c < img.cols(); ++c)
        rep.coboundary_bases[static_cast<std::size_t>(k)].push_back(
            vector_to_form(img.col(c), n, k));
    }
    int z = static_cast<int>(rep.cocycle_bases[static_cast<std::size_t>(k)].size());
    int b = static_cast<int>(rep.coboundary_bases[static_cast<std::size_t>(k)].size());
    rep.betti.push_back(z - b);
  }
  return rep;
}

bool dixmier_check(const LieAlgebra& a, const KForm& omega) {
  if (!lower_central_series(a).nilpotent)
    throw NotNilpotent("dixmier_check: algebra is not nilpotent");
  if (omega.is_zero()) throw Error("dixmier_check: twist must be nonzero");
  CohomologyReport rep = betti_numbers(a, omega);
  for (int b : rep.betti)
    if (b != 0) return false;
  return true;
}

std::optional<KForm> solve_exactness(const LieAlgebra& a, const KForm& phi,
                                     const KForm& omega) {
  if (phi.degree != 2) throw DimensionError("solve_exactness: phi must be a 2-form");
  if (!twisted_differential(a, phi, omega).is_zero())
    throw NotCocycle("solve_exactness: d_omega phi != 0");
  RatMatrix m = differential_matrix(a, 1, &omega);
  auto x = solve(m, form_to_vector(phi));
  if (!x) return std::nullopt;
  return vector_to_form(*x, a.dim, 1);
}

}  // namespace lcs
