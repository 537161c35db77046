// serialize.hpp - JSON views of the result types (nlohmann::ordered_json, so
// keys keep their declaration order and output is byte-stable).
#pragma once

#include "ebcast/broadcast.hpp"
#include "ebcast/formulas.hpp"
#include "ebcast/reduction.hpp"
#include "ebcast/solver.hpp"

#include <json.hpp>

namespace ebcast {

using Json = nlohmann::ordered_json;

Json to_json(const Broadcast& f);
Json to_json(const HearingReport& report);
Json to_json(const SolveResult& result);
Json to_json(const FormulaResult& formula);
Json to_json(const ReductionReport& report);

/// Parses a JSON array of n non-negative integers.
Broadcast broadcast_from_json(const Json& doc, int cap);

}  // namespace ebcast
