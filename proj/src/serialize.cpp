#include "ebcast/serialize.hpp"

#include "ebcast/errors.hpp"

namespace ebcast {
namespace {

Json vertex_list(const std::vector<Vertex>& vs) {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(v);
    return out;
}

Json assignment_json(const Assignment& a) {
    Json out = Json::array();
    for (bool b : a) out.push_back(b);
    return out;
}

}  // namespace

Json to_json(const Broadcast& f) {
    Json out = Json::array();
    for (int c : f.costs()) out.push_back(c);
    return out;
}

Json to_json(const HearingReport& report) {
    Json hearers = Json::array();
    for (const auto& h : report.hearers) hearers.push_back(vertex_list(h));
    return Json{
        {"hearers", hearers},
        {"coverage_count", report.coverage_count},
        {"is_dominating", report.is_dominating},
        {"is_efficient", report.is_efficient},
        {"is_k_eldb", report.is_k_eldb},
        {"cost", report.cost},
        {"overdominated", vertex_list(report.overdominated)},
        {"exceeds_eccentricity", vertex_list(report.exceeds_eccentricity)},
    };
}

Json to_json(const SolveResult& result) {
    Json out;
    out["objective"] = to_string(result.objective);
    out["feasible"] = result.feasible;
    out["value"] = result.value ? Json(*result.value) : Json(nullptr);
    out["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
    out["nodes_explored"] = result.nodes_explored;
    out["exhausted"] = result.exhausted;
    return out;
}

Json to_json(const FormulaResult& formula) {
    Json out;
    out["quantity"] = to_string(formula.quantity);
    if (!formula.applicable || !formula.has_value()) {
        out["value"] = nullptr;
    } else if (std::holds_alternative<long long>(formula.value)) {
        out["value"] = formula.integer();
    } else {
        out["value"] = Json{{"lower", formula.interval().lower.str()},
                            {"upper", formula.interval().upper.str()}};
    }
    out["bound"] = formula.kind == BoundKind::lower_bound ? "lower" : "exact";
    out["source"] = formula.source;
    out["applicable"] = formula.applicable;
    if (!formula.reason.empty()) out["reason"] = formula.reason;
    return out;
}

Json to_json(const ReductionReport& report) {
    Json out;
    out["variables"] = report.variable_count;
    out["clauses"] = report.clause_count;
    out["k"] = report.k;
    out["vertex_count"] = report.vertex_count;
    out["expected_vertex_count"] = report.expected_vertex_count;
    out["distance_property"] = report.distance_property;
    out["satisfying_assignments"] = report.satisfying_assignments;
    out["x3sat_satisfiable"] = report.x3sat_satisfiable;
    out["solver_feasible"] =
        report.solver_feasible ? Json(*report.solver_feasible) : Json(nullptr);
    out["solver_exhausted"] = report.solver_exhausted;
    out["nodes_explored"] = report.nodes_explored;
    out["equivalence_holds"] =
        report.equivalence_holds ? Json(*report.equivalence_holds) : Json(nullptr);
    out["roundtrip_ok"] = report.roundtrip_ok;
    out["witness_shape_ok"] =
        report.witness_shape_ok ? Json(*report.witness_shape_ok) : Json(nullptr);
    out["witness_assignment"] =
        report.witness_assignment ? assignment_json(*report.witness_assignment) : Json(nullptr);
    out["notes"] = report.notes;
    out["passed"] = report.passed();
    return out;
}

Broadcast broadcast_from_json(const Json& doc, int cap) {
    if (!doc.is_array()) throw InvalidInput("broadcast must be a JSON array");
    std::vector<int> costs;
    for (const auto& item : doc) {
        if (!item.is_number_integer()) throw InvalidInput("broadcast entries must be integers");
        costs.push_back(item.get<int>());
    }
    return Broadcast(std::move(costs), cap);
}

}  // namespace ebcast
