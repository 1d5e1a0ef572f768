#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcs/cohomology.hpp"
#include "lcs/liealg.hpp"

namespace lcs {

enum class Kind { FirstKind, SecondKind };

std::string kind_str(Kind k);

struct SymplecticVerdict {
  bool closed = false;
  bool nondegenerate = false;
  std::string reason;
  bool ok() const { return closed && nondegenerate; }
};

/// sigma must be closed with sigma^n a volume form (dim = 2n).
SymplecticVerdict verify_symplectic(const LieAlgebra& a, const KForm& sigma);

struct ContactStructure {
  KForm theta;
  RatVector reeb;  // i_R d theta = 0, theta(R) = 1
};

struct ContactResult {
  std::optional<ContactStructure> structure;
  std::string reason;
  bool ok() const { return structure.has_value(); }
};

/// theta ^ (d theta)^(n-1) must be a volume form on an odd 2n-1 dimensional
/// algebra; on success the Reeb vector is solved for and returned.
ContactResult verify_contact(const LieAlgebra& a, const KForm& theta);

struct LcsStructure {
  KForm omega;       // closed Lee form
  KForm eta;         // anti-Lee form
  KForm phi;         // d eta - omega ^ eta
  RatVector lee;     // V: omega(V)=0, eta(V)=1, i_V d eta = 0
  RatVector anti_lee;  // U: omega(U)=1, eta(U)=0, i_U d eta = 0
  Kind kind = Kind::FirstKind;
  bool exact = true;
};

struct LcsResult {
  std::optional<LcsStructure> structure;
  std::string reason;
  bool ok() const { return structure.has_value(); }
};

/// Checks d omega = 0, rank(d eta) < 2n and omega ^ eta ^ (d eta)^(n-1) != 0,
/// solves for the Lee and anti-Lee vectors, asserts [U, V] = 0 and
/// re-verifies d Phi = omega ^ Phi with Phi^n != 0. Rejections name the
/// first failed condition.
LcsResult verify_lcs_first_kind(const LieAlgebra& a, const KForm& omega, const KForm& eta);

struct AutomorphismReport {
  std::vector<RatVector> basis;       // basis of g_Phi = { X : L_X Phi = 0 }
  std::vector<Rational> lee_values;   // omega on that basis
  Kind kind = Kind::SecondKind;
};

/// Requires (phi, omega) to satisfy d omega = 0, d phi = omega ^ phi and
/// phi^n != 0 (else NotLcs). First kind iff the Lee morphism is nonzero on
/// the automorphism algebra.
AutomorphismReport classify_kind(const LieAlgebra& a, const KForm& phi, const KForm& omega);

struct Derivation {
  RatMatrix matrix;
};

struct SplitResult {
  LieAlgebra h;               // ker omega with induced brackets
  ContactStructure contact;   // eta restricted, with its Reeb vector
  Derivation deriv;           // ad_U restricted to h, a contact derivation
  RatMatrix h_embedding;      // columns: h basis vectors inside g
  RatVector anti_lee;         // the U that was used
};

/// Splits a first-kind structure along ker omega per the semidirect
/// correspondence; the bracket well-definedness ([g,g] inside ker omega)
/// is checked, not assumed.
SplitResult split_to_contact(const LieAlgebra& a, const LcsStructure& s);

struct JoinResult {
  LieAlgebra g;        // h x| R, the R-slot last
  LcsStructure cert;   // omega dual to the R factor, eta extending theta
};

/// Converse construction; d must be a contact derivation of (h, theta).
JoinResult join_from_contact(const LieAlgebra& h, const ContactStructure& contact,
                             const Derivation& d);

struct ComplexVerdict {
  bool ok = false;
  std::string reason;  // failing pair and Nijenhuis value on reject
};

/// Accepts iff N_J(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] vanishes on
/// all basis pairs; requires J^2 = -Id (else NotAlmostComplex).
ComplexVerdict check_complex_structure(const LieAlgebra& a, const RatMatrix& j);

}  // namespace lcs
