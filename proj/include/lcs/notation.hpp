#pragma once

#include <string>

#include "lcs/liealg.hpp"

namespace lcs {

/// Structure-equation notation: "(0,0,0,12)" means d e^4 = e^{12} and the
/// other basis covectors are closed; under the global sign convention this
/// fixes [e_1, e_2] = -e_4. Slots are 0 or +-separated two-digit index
/// pairs with digits 1..9 bounded by the dimension.
LieAlgebra parse_structure_notation(const std::string& s);

/// Canonical string for an algebra whose differentials have coefficients
/// in {-1, 0, 1} and dimension <= 9; throws otherwise.
std::string print_structure_notation(const LieAlgebra& a);

/// Form expressions: sums of [coef *] eI terms with rational coefficient
/// literals and strictly ascending digit strings, e.g. "2*e12+e34", "e3",
/// "-1/2*e123". Degree is inferred and must be uniform.
KForm parse_form_expr(const std::string& s, const LieAlgebra& a);
KForm parse_form_expr(const std::string& s, int dim);

}  // namespace lcs
