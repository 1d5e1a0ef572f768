#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcs/form.hpp"
#include "lcs/liealg.hpp"
#include "lcs/sparse_poly.hpp"

namespace lcs {

using PolyFunc = SparsePoly;

/// Differential form on a coordinate space with polynomial coefficients.
/// Index tuples refer to positions in `coords` (1-based); variables not in
/// `coords` act as formal parameters (never differentiated).
struct PolyForm {
  std::vector<std::string> coords;
  int degree = 0;
  std::map<FormIndex, PolyFunc> terms;

  PolyForm() = default;
  PolyForm(std::vector<std::string> cs, int k) : coords(std::move(cs)), degree(k) {}

  void add_term(FormIndex idx, PolyFunc coeff);
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const PolyForm& a, const PolyForm& b);
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }
};

PolyForm operator+(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a, const PolyForm& b);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// Exterior derivative in the coordinates; parameters are constants.
PolyForm d(const PolyForm& f);

/// Polynomial map between coordinate spaces; parameters may occur in the
/// components.
struct PolyMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<PolyFunc> comps;  // one per target coordinate
};

/// Exact pullback: coefficients composed with the map, differentials via
/// the chain rule. Functorial against composition.
PolyForm pullback(const PolyMap& m, const PolyForm& f);

/// Substitute argument polynomials (one per source coordinate) into the
/// components.
std::vector<PolyFunc> apply_map(const PolyMap& m, const std::vector<PolyFunc>& args);

/// Compose maps: (m2 after m1); target of m1 must match source of m2.
PolyMap compose(const PolyMap& m2, const PolyMap& m1);

std::vector<PolyFunc> coordinate_polys(const std::vector<std::string>& names);
std::vector<PolyFunc> constant_polys(const std::vector<Rational>& values);

/// A group law as a PolyMap with source (x-slot, x'-slot) and target the
/// x-slot names; helpers to act on either slot.
struct GroupLaw {
  PolyMap mul;                       // 2k -> k
  std::vector<std::string> coords;   // k names (the unprimed slot)
  std::vector<std::string> primed;   // k names (the primed slot)

  std::vector<PolyFunc> product(const std::vector<PolyFunc>& a,
                                const std::vector<PolyFunc>& b) const;
};

GroupLaw make_group_law(std::vector<std::string> coords, std::vector<PolyFunc> comps);

struct GroupLawVerdict {
  bool associative = false;
  bool unit_ok = false;
  bool inverse_ok = true;  // stays true when no inverse map is supplied
  std::string detail;
  bool ok() const { return associative && unit_ok && inverse_ok; }
};

/// Associativity, two-sided unit at the given point, optional inverse.
GroupLawVerdict verify_group_law(const GroupLaw& g, const std::optional<PolyMap>& inv,
                                 const std::vector<Rational>& unit);

/// L_g^* f = f with the g-slot as formal parameters.
bool verify_left_invariance(const GroupLaw& g, const PolyForm& f);

/// phi(s,s') - phi(s, s's'') + phi(ss', s'') - phi(s', s'') = 0.
bool verify_cocycle(const GroupLaw& g, const PolyFunc& phi);

/// map(a . b) = map(a) . map(b), with the flow parameter formal.
bool verify_automorphism(const GroupLaw& g, const PolyMap& m);

/// flow_{t} after flow_{t'} equals flow_{t+t'}.
bool verify_one_parameter_group(const GroupLaw& g, const PolyMap& flow,
                                const std::string& param);

struct LatticeConstraint {
  Rational modulus;  // coordinate ranges over modulus * Z + offset
  Rational offset;
};

struct LatticeSpec {
  std::vector<LatticeConstraint> constraints;  // one per coordinate
};

/// Generic lattice point in formal integer parameters mapped through m
/// stays on the lattice: each output coordinate, minus its offset and
/// divided by its modulus, must have integer coefficients. Integer-valued
/// flow parameters in m are treated as further formal integers.
bool verify_lattice_invariance(const PolyMap& m, const LatticeSpec& lat);

struct ChiVerdict {
  bool flow_identity = false;       // chi_{t+t'}(s) = chi_t(s) + chi_{t'}(rep_t(s))
  bool cocycle_difference = false;  // the cocycle-difference identity
  bool derivative_at_unit = false;  // d/dt|_0 (d_e chi_t) prescribed
  bool ok() const { return flow_identity && cocycle_difference && derivative_at_unit; }
};

/// Lift data for a central extension: the flow upstairs is
/// (u, s) -> (u + chi_t(s), rep_t(s)).
struct ChiTildeWitness {
  GroupLaw group;       // base group S
  PolyFunc cocycle;     // phi on S x S (coords + primed coords)
  PolyMap rep;          // phi_t with formal parameter
  std::string param;    // the parameter name (t)
  PolyFunc chi;         // chi_t on S
};

ChiVerdict verify_chi_identities(const ChiTildeWitness& w);

/// Double-extension variant: the flow downstairs runs backwards,
/// chi_{t+t'}(s) = chi_t(s) + chi_{t'}(rep_{-t}(s)), the cocycle difference
/// uses d/dr of cocycle(rep_r x, rep_r y) between r = -t and r = 0, and the
/// unit derivative equals -i_{Z1} sigma1.
struct DoubleChiWitness {
  GroupLaw group;       // base group S1
  PolyFunc cocycle;     // the induced cocycle (phi1, rep1) on S1 x S1
  PolyMap rep;          // rep1_t with formal parameter
  std::string param;
  PolyFunc chi;
  KForm sigma1;         // constant symplectic form on the Lie algebra of S1
  RatVector z1;
};

ChiVerdict verify_double_chi_identities(const DoubleChiWitness& w);

/// Lie algebra of a polynomial group law from the mixed bilinear part of
/// the multiplication: c^k_ij = B_k(e_i, e_j) - B_k(e_j, e_i).
LieAlgebra algebra_of_group(const GroupLaw& g);

/// Expand the coordinate differential of each coframe element against the
/// abstract structure constants: d F^a = sum gamma^a_ij F^i ^ F^j must
/// hold as polynomial 2-forms. The coframe order matches the abstract
/// basis order.
bool coframe_matches_algebra(const std::vector<PolyForm>& coframe, const LieAlgebra& a);

PolyForm one_form(const std::vector<std::string>& coords,
                  std::vector<std::pair<int, PolyFunc>> components);

}  // namespace lcs
