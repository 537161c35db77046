// sweep.hpp - formula-versus-solver sweeps over graph families.
//
// A sweep only records: every row carries the formula value, the solver
// value and whether they agree. Rows listed as known discrepancies are
// flagged `expected_discrepancy` so a consumer can tell them from regressions.
#pragma once

#include "ebcast/graph.hpp"
#include "ebcast/solver.hpp"

#include <string>
#include <vector>

namespace ebcast {

enum class Suite { paths, cycles, stars, lex, strong, bounds };

const char* to_string(Suite suite) noexcept;
/// "paths", ..., "bounds", or "all" for every suite.
std::vector<Suite> parse_suites(const std::string& name);

struct SweepRow {
    std::string family;
    std::string params;
    std::string quantity;
    std::string formula;
    std::string solver;
    bool agree = false;
    std::string note;
    bool expected_discrepancy = false;
    bool exhausted = false;
    /// Informational rows (e.g. chain direction) never count as disagreement.
    bool report_only = false;
    /// Feasible solver results behind this row whose witness was re-checked
    /// with `classify`, and how many of those checks failed.
    int witnesses_checked = 0;
    int witness_failures = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;

    std::size_t agreeing() const;
    /// Rows that disagree and are not listed as known discrepancies.
    std::size_t unexpected_disagreements() const;
    std::size_t expected_discrepancies() const;
    std::size_t exhausted() const;
    std::size_t witnesses_checked() const;
    std::size_t witness_failures() const;
    bool ok() const { return unexpected_disagreements() == 0 && witness_failures() == 0; }

    /// Header: family,params,quantity,formula,solver,agree,note
    std::string to_csv() const;
    std::string to_json() const;
};

struct SweepOptions {
    SolveOptions solve;
    unsigned jobs = 1;
};

SweepReport sweep(const std::vector<Suite>& suites, const SweepOptions& options = {});

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Small named graphs (at most 16 vertices) used by the bound and
/// monotonicity checks.
std::vector<NamedGraph> standard_corpus();

}  // namespace ebcast
