#pragma once

#include "json.hpp"

#include "latbb/bounds.hpp"
#include "latbb/harness.hpp"
#include "latbb/reformulate.hpp"
#include "latbb/solve.hpp"

namespace latbb {

using json = nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits, else as
// decimal strings; rationals as "p/q" strings. Both forms are accepted on input.
json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const IntMatrix& m);
json to_json(const IntVector& v);
Integer integer_from_json(const json& j);
Rational rational_from_json(const json& j);
IntMatrix int_matrix_from_json(const json& j);
IntVector int_vector_from_json(const json& j);

/// {"A", "l1", "w1", "l2", "w2"} or {"constraint", "lower", "upper"}.
FeasibilityInstance instance_from_json(const json& j);
json to_json(const FeasibilityInstance& inst);

json to_json(const Reformulation& ref);
json to_json(const BnbReport& rep);
json to_json(const ExperimentRecord& rec);
json to_json(const ExperimentSummary& s);

ThresholdQuery threshold_query_from_json(const json& j);
GeneratorSpec generator_spec_from_json(const json& j);
Pipeline pipeline_from_json(const json& j);

}  // namespace latbb
