#pragma once

#include <nlohmann/json.hpp>

#include "pwe/pseudowronskian.hpp"

namespace pwe {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "pwe-report/1";

Json to_json(const BigRational& q);
Json to_json(const ParamPoly& p);
Json to_json(const RatFunc& r);
Json to_json(const ZPoly& p);
Json to_json(const MayaDiagram& m);
Json to_json(const UniversalCharacter& uc);
Json to_json(const EquivalenceReport& r);
Json to_json(const OracleReport& r);
Json to_json(const PotentialExpr& v);
Json to_json(const PotentialReport& r);

BigRational rational_from_json(const Json& j);
ParamPoly param_poly_from_json(const Json& j);
RatFunc rat_func_from_json(const Json& j);
ZPoly zpoly_from_json(const Json& j);
UniversalCharacter uc_from_json(const Json& j);
EquivalenceReport equivalence_report_from_json(const Json& j);

}  // namespace pwe
