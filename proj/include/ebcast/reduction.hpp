// reduction.hpp - EXACT 3-SAT to k-ELDB gadget construction and checks.
//
// Each variable u_i gets a copy of T_k whose two centers are labelled u_i and
// its negation. Each clause gets one vertex joined to its three literal
// centers by paths of length k (k-1 internal vertices each). A truth
// assignment maps to the broadcast giving cost k to the true literal center
// of every variable; the checks below test that this correspondence is exact.
#pragma once

#include "ebcast/broadcast.hpp"
#include "ebcast/graph.hpp"
#include "ebcast/solver.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ebcast {

struct Literal {
    int variable = 1;  // 1-based
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;
using Assignment = std::vector<bool>;  // index i holds the value of u_{i+1}

struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;
};

/// Throws InvalidParameter unless every clause uses three distinct variables
/// in 1..variable_count.
void validate(const CnfFormula& cnf);

/// DIMACS subset: "c" comment lines, one "p cnf n m" header, then m lines of
/// three non-zero literals followed by 0. Failures are ParseErrors with kind
/// clause_width, repeated_variable, tautology, out_of_range or malformed.
CnfFormula parse_cnf(std::string_view text);
std::string serialize_cnf(const CnfFormula& cnf);

/// True when every clause has exactly one true literal under `assignment`.
bool exactly_one_true(const CnfFormula& cnf, const Assignment& assignment);

/// All exactly-one satisfying assignments, in binary counting order with u_1
/// as the low bit. Refuses more than 20 variables.
std::vector<Assignment> x3sat_brute(const CnfFormula& cnf);

struct ReductionGraph {
    Graph graph;
    int k = 2;
    std::vector<Vertex> pos_vertex;     // per variable
    std::vector<Vertex> neg_vertex;     // per variable
    std::vector<Vertex> clause_vertex;  // per clause
    /// path_vertices[j][l] = internal vertices of the path from clause j to
    /// its l-th literal, listed from the clause end.
    std::vector<std::array<std::vector<Vertex>, 3>> path_vertices;

    Vertex literal_vertex(const Literal& literal) const;
};

/// Vertex ids: the T_k blocks in variable order (centers first in each
/// block), then clause vertices, then path internals by (clause, literal).
/// Labels: "pos:i", "neg:i", "tk:i:<local>", "clause:j", "path:j:l:t".
ReductionGraph build_reduction(const CnfFormula& cnf, int k);

/// (3k-2)m + (4k-2)n.
long long expected_vertex_count(const CnfFormula& cnf, int k);

/// Cost k on the center of the true literal of every variable, 0 elsewhere.
Broadcast assignment_to_broadcast(const ReductionGraph& rg, const Assignment& assignment);

struct AssignmentRecovery {
    std::optional<Assignment> assignment;
    std::string rejection;  // set when the broadcast is not literal-shaped
};

/// Reads a truth assignment back from a k-ELDB of the gadget. Throws
/// PreconditionError when `f` is not a k-ELDB; returns a rejection when the
/// broadcasters are anything other than one cost-k literal center per variable.
AssignmentRecovery broadcast_to_assignment(const ReductionGraph& rg, const Broadcast& f);

/// d(clause, l) == k for each literal of the clause and > k for every other
/// literal center. Returns an empty string when the property holds.
std::string check_distance_gadget(const ReductionGraph& rg, const CnfFormula& cnf);

struct ReductionReport {
    int variable_count = 0;
    int clause_count = 0;
    int k = 0;
    long long vertex_count = 0;
    long long expected_vertex_count = 0;
    bool distance_property = false;
    std::size_t satisfying_assignments = 0;
    bool x3sat_satisfiable = false;
    std::optional<bool> solver_feasible;  // absent when the solver gave up
    bool solver_exhausted = false;
    std::uint64_t nodes_explored = 0;
    std::optional<bool> equivalence_holds;
    bool roundtrip_ok = true;
    std::optional<bool> witness_shape_ok;
    std::optional<Assignment> witness_assignment;
    std::vector<std::string> notes;

    /// Counts, distances, round trips, witness shape and equivalence all pass.
    bool passed() const;
};

ReductionReport verify_reduction(const CnfFormula& cnf, int k, const SolveOptions& options = {});

}  // namespace ebcast
