#pragma once

#include <optional>

#include "lcs/structures.hpp"

namespace lcs {

bool is_derivation(const LieAlgebra& a, const RatMatrix& d);

/// Witness X with ad_X = d, when d is inner.
std::optional<RatVector> inner_witness(const LieAlgebra& a, const RatMatrix& d);

bool is_contact_derivation(const LieAlgebra& a, const RatMatrix& d, const KForm& theta);

/// sigma(DX, Y) + sigma(X, DY) = 0 for all X, Y.
bool is_symplectic_derivation(const LieAlgebra& a, const RatMatrix& d, const KForm& sigma);

/// (D* tau)(X, Y) = tau(DX, Y) + tau(X, DY) for a 2-form tau.
KForm dstar_form(const KForm& tau, const RatMatrix& d);

/// Specialization of dstar_form to a symplectic form; a 2-cocycle whenever
/// d is a derivation (asserted).
KForm dstar_sigma(const LieAlgebra& a, const KForm& sigma, const RatMatrix& d);

/// h x| R by a derivation; the new generator occupies the last slot.
LieAlgebra semidirect_extend(const LieAlgebra& h, const RatMatrix& d);  // NotDerivation

/// R (+)_sigma s by a 2-cocycle; the new central generator occupies the
/// first slot.
LieAlgebra central_extend(const LieAlgebra& s, const KForm& sigma);  // NotCocycle

/// Lift of a symplectic derivation to the contact central extension:
/// D(a, X) = (0, D_s X). Verified to be a contact derivation there.
RatMatrix lift_derivation(const LieAlgebra& s, const KForm& sigma, const RatMatrix& ds);

/// Converse direction: given a contact derivation of the central extension
/// (contact form dual to the first slot), extract the base derivation,
/// checking that the center column vanishes and the result is symplectic.
std::optional<RatMatrix> extract_symplectic_derivation(const LieAlgebra& h_ext,
                                                       const KForm& sigma,
                                                       const RatMatrix& d);

struct LcsExtensionResult {
  LieAlgebra g;       // R (+) s (+) R, dim + 2; Lee slot first, anti-Lee last
  LcsStructure cert;  // verified first-kind structure with central Lee vector
};

/// The two-slot extension of a symplectic algebra by a symplectic
/// derivation; the result carries the canonical first-kind structure
/// omega = e^{2n+2}, eta = e^1.
LcsExtensionResult lcs_extension(const LieAlgebra& s, const KForm& sigma,
                                 const RatMatrix& ds);

struct DoubleExtensionData {
  LieAlgebra s1;
  KForm sigma1;      // symplectic on s1
  RatMatrix deriv;   // derivation of s1 (not necessarily symplectic)
  RatVector z1;      // element of s1
};

struct CompatibilityFailed : Error {
  KForm residual;  // d(i_Z1 sigma1) + (D*)^2 sigma1
  explicit CompatibilityFailed(KForm r)
      : Error("double_extension: d(i_Z1 sigma1) != -(D*)^2 sigma1, residual " +
              form_str(r)),
        residual(std::move(r)) {}
};

struct DoubleExtensionResult {
  LieAlgebra s;   // dim + 2; slots (a1, s1..., a1')
  KForm sigma;    // verified symplectic form
};

DoubleExtensionResult double_extension(const DoubleExtensionData& data);

struct LcsExtensionExtract {
  LieAlgebra s;
  KForm sigma;
  RatMatrix ds;
  RatMatrix basis;  // columns (V, complement of <V> in ker omega, U) in g
};

/// Converse of the central-Lee-vector correspondence: recovers the
/// symplectic base, form and derivation from a first-kind structure whose
/// Lee vector is central.
LcsExtensionExtract extract_lcs_extension(const LieAlgebra& g, const LcsStructure& s);

}  // namespace lcs
