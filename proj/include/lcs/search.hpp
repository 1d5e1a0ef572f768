#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcs/extensions.hpp"
#include "lcs/pfaffian.hpp"

namespace lcs {

enum class ImpossibleReason {
  PfaffianIdenticallyZero,
  FilterObstruction,       // f_m >= 2 (nilpotent case)
  CenterObstruction,       // dim Z(ker omega) != 1 structurally (abelian case),
                           // or dim Z != 1 for a nilpotent contact candidate
  ContactPolynomialZero
};

std::string impossible_reason_str(ImpossibleReason r);

struct TrialEntry {
  int index = 0;
  std::string omega;
  std::string outcome;
};

struct SearchConfig {
  int budget = 128;        // candidate omegas for the lcs search
  std::uint64_t seed = 20240915;
  int omega_bound = 2;     // integer grid bound for omega coefficients
  int theta_retries = 16;  // contact witnesses tried per omega
};

/// Default seed comes from LCS_SEED when set.
SearchConfig default_search_config();

struct ExistenceVerdict {
  enum class Outcome { Exists, ProvedImpossible, NoCertificateFound };
  Outcome outcome = Outcome::NoCertificateFound;
  std::optional<ImpossibleReason> reason;
  std::optional<KForm> symplectic_cert;
  std::optional<ContactStructure> contact_cert;
  std::optional<std::pair<KForm, KForm>> lcs_cert;  // (omega, eta)
  std::vector<TrialEntry> log;
  bool exists() const { return outcome == Outcome::Exists; }
  bool impossible() const { return outcome == Outcome::ProvedImpossible; }
};

/// Pfaffian of the generic 2-cocycle in the cocycle basis of degree 2; the
/// symbolic certificate behind symplectic_exists.
SparsePoly symplectic_pfaffian(const LieAlgebra& a);

/// Decides symplectic existence on an even-dimensional algebra of dim <= 12
/// by testing the generic-cocycle Pfaffian for identical vanishing; a
/// nonzero polynomial is turned into an exact rational witness.
ExistenceVerdict symplectic_exists(const LieAlgebra& a, const SearchConfig& cfg = default_search_config());

/// Top coefficient of theta ^ (d theta)^(n-1) for a generic 1-form theta,
/// as a polynomial in the theta coordinates u1..u_{2n-1}.
SparsePoly contact_polynomial(const LieAlgebra& a);

ExistenceVerdict contact_exists(const LieAlgebra& a, const SearchConfig& cfg = default_search_config());

/// Certificate search for first-kind structures following the semidirect
/// correspondence: candidate Lee forms, per-omega contact decision on
/// ker omega, then the linear anti-Lee solve. Sound but incomplete:
/// NoCertificateFound is evidence, not proof.
ExistenceVerdict lcs_first_kind_search(const LieAlgebra& a, const SearchConfig& cfg = default_search_config());

}  // namespace lcs
