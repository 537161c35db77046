#include "ebcast/distance.hpp"
#include "ebcast/errors.hpp"
#include "ebcast/reduction.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ebcast;

namespace {

const char* kTwoClause = "c two clauses, u4 unused\np cnf 5 2\n1 2 3 0\n1 -2 -5 0\n";

ParseError::Kind cnf_error(const std::string& text) {
    try {
        parse_cnf(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no error for: " << text);
    return ParseError::Kind::malformed;
}

}  // namespace

TEST_CASE("CNF parsing and serialization") {
    const auto cnf = parse_cnf(kTwoClause);
    CHECK(cnf.variable_count == 5);
    REQUIRE(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[1][1] == Literal{2, true});
    CHECK(parse_cnf(serialize_cnf(cnf)).clauses == cnf.clauses);

    CHECK(cnf_error("p cnf 3 1\n1 2 0\n") == ParseError::Kind::clause_width);
    CHECK(cnf_error("p cnf 3 1\n1 1 2 0\n") == ParseError::Kind::repeated_variable);
    CHECK(cnf_error("p cnf 3 1\n1 -1 2 0\n") == ParseError::Kind::tautology);
    CHECK(cnf_error("p cnf 3 1\n1 2 4 0\n") == ParseError::Kind::out_of_range);
    CHECK(cnf_error("p dnf 3 1\n1 2 3 0\n") == ParseError::Kind::malformed);
}

TEST_CASE("exactly-one semantics") {
    const auto cnf = parse_cnf("p cnf 3 1\n1 2 3 0\n");
    CHECK(exactly_one_true(cnf, {true, false, false}));
    CHECK_FALSE(exactly_one_true(cnf, {true, true, false}));
    CHECK_FALSE(exactly_one_true(cnf, {false, false, false}));
    CHECK(x3sat_brute(cnf).size() == 3);
    const auto neg = parse_cnf("p cnf 3 1\n-1 -2 -3 0\n");
    CHECK(x3sat_brute(neg).size() == 3);
}

TEST_CASE("two-clause gadget layout") {
    const auto cnf = parse_cnf(kTwoClause);
    const auto rg = build_reduction(cnf, 2);
    CHECK(rg.graph.vertex_count() == 38);
    CHECK(expected_vertex_count(cnf, 2) == 38);
    CHECK(rg.graph.label(rg.pos_vertex[0]) == "pos:1");
    CHECK(rg.graph.label(rg.neg_vertex[4]) == "neg:5");
    CHECK(rg.graph.label(rg.clause_vertex[1]) == "clause:2");
    CHECK(rg.literal_vertex(Literal{2, true}) == rg.neg_vertex[1]);
    CHECK(check_distance_gadget(rg, cnf).empty());
    CHECK_FALSE(rg.graph.connected());
    CHECK_THROWS_AS(build_reduction(cnf, 1), InvalidParameter);
}

TEST_CASE("vertex count formula over many gadgets") {
    for (int k = 2; k <= 4; ++k)
        for (const auto& cnf : testsupport::all_cnfs(4, 2)) {
            const auto rg = build_reduction(cnf, k);
            REQUIRE(rg.graph.vertex_count() == expected_vertex_count(cnf, k));
            REQUIRE(check_distance_gadget(rg, cnf).empty());
        }
}

TEST_CASE("assignment and broadcast round trip") {
    const auto cnf = parse_cnf(kTwoClause);
    for (int k = 2; k <= 3; ++k) {
        const auto rg = build_reduction(cnf, k);
        const auto d = all_pairs_distances(rg.graph, Connectivity::allow_disconnected);
        for (const auto& a : x3sat_brute(cnf)) {
            const auto f = assignment_to_broadcast(rg, a);
            CHECK(classify(rg.graph, d, f).is_k_eldb);
            const auto back = broadcast_to_assignment(rg, f);
            REQUIRE(back.assignment.has_value());
            CHECK(*back.assignment == a);
        }
    }
}

TEST_CASE("recovery rejects non-k-ELDBs") {
    const auto cnf = parse_cnf("p cnf 3 1\n1 2 3 0\n");
    const auto rg = build_reduction(cnf, 2);
    CHECK_THROWS_AS(broadcast_to_assignment(rg, Broadcast::zero(rg.graph.vertex_count(), 2)),
                    PreconditionError);
}

TEST_CASE("verification reports") {
    const auto single = verify_reduction(parse_cnf("p cnf 3 1\n1 2 3 0\n"), 2);
    CHECK(single.passed());
    CHECK(single.x3sat_satisfiable);
    CHECK(*single.solver_feasible);
    CHECK(*single.witness_shape_ok);

    // Exactly one true and exactly one false among the same three variables.
    const auto unsat = verify_reduction(parse_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"), 2);
    CHECK(unsat.passed());
    CHECK_FALSE(unsat.x3sat_satisfiable);
    CHECK(unsat.solver_feasible == std::optional<bool>(false));
}
