#pragma once

#include <optional>
#include <vector>

#include "lcs/liealg.hpp"

namespace lcs {

/// Chevalley-Eilenberg cohomology data, untwisted or twisted by a closed
/// 1-form (Lichnerowicz / Morse-Novikov).
struct CohomologyReport {
  int dim = 0;
  std::optional<KForm> twist;
  std::vector<int> betti;                           // b_0..b_n
  std::vector<std::vector<KForm>> cocycle_bases;    // per degree 0..n
  std::vector<std::vector<KForm>> coboundary_bases; // per degree 0..n
  int euler_characteristic() const;
};

/// d_omega f = d f - omega ^ f; omega must be closed.
KForm twisted_differential(const LieAlgebra& a, const KForm& f, const KForm& omega);

/// Matrix of d (or d_omega) from degree k to k+1 in the monomial bases.
/// Degree 0 is the one-dimensional space of constants.
RatMatrix differential_matrix(const LieAlgebra& a, int degree, const KForm* twist);

CohomologyReport betti_numbers(const LieAlgebra& a, std::optional<KForm> twist);

/// True iff every twisted Betti number vanishes; the expected outcome for
/// a nilpotent algebra with nonzero closed twist. Throws NotNilpotent /
/// NotClosedTwist on bad input.
bool dixmier_check(const LieAlgebra& a, const KForm& omega);

/// Some eta with d_omega eta = phi, or nullopt when [phi] != 0 in H^2_omega.
/// phi must be a d_omega-cocycle.
std::optional<KForm> solve_exactness(const LieAlgebra& a, const KForm& phi,
                                     const KForm& omega);

bool is_closed(const LieAlgebra& a, const KForm& f);

}  // namespace lcs
