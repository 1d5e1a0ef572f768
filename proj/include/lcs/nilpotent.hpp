#pragma once

#include <vector>

#include "lcs/liealg.hpp"

namespace lcs {

struct LowerCentralSeries {
  std::vector<int> dims;  // dim g, dim [g,g], dim [g,[g,g]], ... until stable
  bool nilpotent = false;
  int step = 0;  // least m with C^m = 0 when nilpotent (abelian: 1)
};

LowerCentralSeries lower_central_series(const LieAlgebra& a);

bool is_nilpotent(const LieAlgebra& a);

/// Characteristic filtration of the dual: W_1 = ker d, W_k = d^{-1}(Lambda^2 W_{k-1}).
struct Filtration {
  std::vector<RatMatrix> spaces;  // columns = coordinates of 1-forms, W_1..W_m
  std::vector<int> profile;       // f_k = dim W_k - dim W_{k-1}
  int steps = 0;                  // m with W_m = g^*
};

Filtration characteristic_filtration(const LieAlgebra& a);  // NotNilpotent

enum class FiltrationVerdict {
  Passes,
  ObstructedFmTooBig,  // f_m >= 2: no lcs structure exists
  AbelianNoLcs         // abelian algebras never carry one (omega would vanish)
};

/// Even-dimensional nilpotent input; abelian input gets its own verdict.
FiltrationVerdict lcs_filtration_obstruction(const LieAlgebra& a);

bool is_unimodular(const LieAlgebra& a);

std::vector<RatVector> center(const LieAlgebra& a);

}  // namespace lcs
