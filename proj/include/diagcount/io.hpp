#pragma once

#include <json.hpp>

#include "diagcount/bounds.hpp"
#include "diagcount/equation.hpp"

namespace diagcount {

using json = nlohmann::ordered_json;

// {"int": k} | {"pow": k} | {"poly": [c0, c1, ...]}
FieldElem parse_element(const FieldCtx& ctx, const json& j);
json element_to_json(const FieldCtx& ctx, const FieldElem& e);

// {"p": 3, "N": 2, "terms": [{"a": ..., "d": 4, "m": 2}, ...],
//  "b": ..., "max_bits"?: 40}
Equation parse_equation(const json& j);

json count_report_to_json(const CountReport& rep);
json weil_report_to_json(const WeilReport& rep);
json existence_report_to_json(const ExistenceReport& rep);
json curve_report_to_json(const CurveBoundReport& rep);
json field_info_to_json(const FieldCtx& ctx);

std::string rat_to_string(const BigRat& r);

}  // namespace diagcount
