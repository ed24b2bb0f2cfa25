#pragma once

// JSON forms of the core values. Exact quantities travel as strings ("3/4")
// or integers; floats as JSON numbers, which nlohmann::json prints with
// round-trip precision.

#include "classify.hpp"
#include "haar.hpp"
#include "laurent.hpp"
#include "qcalc.hpp"
#include "repdata.hpp"
#include "rootsys.hpp"
#include "soibelman.hpp"

#include <json.hpp>

namespace qflag {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json to_json(const LaurentPoly& p);  // {"terms": [[e, c], ...]}
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const RationalFunction& f);  // {"num": poly, "den": poly}
RationalFunction rational_function_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const QValue& q);  // "1/2" or 0.5
QValue qvalue_from_json(const Json& j);

Json to_json(const RootSystem& rs);
std::string weight_key(const Weight& w);  // "1,0,-2"
Weight weight_from_key(std::string_view key);
Json to_json(const WeightTable& t);  // {"highest", "dimension", "multiplicities": {"1,0": 1, ...}}
WeightTable weight_table_from_json(const Json& j);

// Evaluated scalars: {"value_exact": {"num", "den"}} or {"value_float": x}.
void put_value(Json& j, const Scalar& s);
Scalar value_from_json(const Json& j);
Json to_json(const std::vector<ExponentMultiplicity>& f);
Json to_json(const ExponentPair& e);

Json to_json(const DiagonalModel& m);  // {"exponents": [...], "q": .., "trunc": N, ...}
DiagonalModel diagonal_model_from_json(const Json& j);
Json to_json(const std::vector<SpectrumEntry>& spectrum);
Json to_json(const CommutationReport& r);
Json to_json(const OrthogonalityReport& r);
Json to_json(const HaarALambda& h);
Json to_json(const Su2Operator& op);  // dense row-major matrix

Json to_json(const ExactLog& l);  // {"2": "1", "3": "-1/2"}
ExactLog exact_log_from_json(const Json& j);
Json to_json(const CanonicalSubgroup& g);
CanonicalSubgroup canonical_subgroup_from_json(const Json& j);
Json to_json(const ClassificationResult& r);

// {"q": "1/2", "blocks": [{"spin": "0", "c": {"base": "1", "exp": "1"}}, ...]}
ActionSpec action_spec_from_json(const Json& j);
Json to_json(const ActionSpec& spec);

}  // namespace qflag
