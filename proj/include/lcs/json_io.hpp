#pragma once

#include <json.hpp>

#include "lcs/report.hpp"

namespace lcs {

using Json = nlohmann::json;

// Rationals travel as strings, "p/q" or "p" when the denominator is 1.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const LieAlgebra& a);
LieAlgebra algebra_from_json(const Json& j);

Json to_json(const KForm& f);
KForm form_from_json(const Json& j, int dim);

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json to_json(const CohomologyReport& rep);
Json to_json(const ExistenceVerdict& v);
Json to_json(const Report& rep);
Json to_json(const SparsePoly& p);
Json to_json(const InvariantSignature& s);

Json group_model_to_json(const GroupModel& m);

}  // namespace lcs
