#include "ebcast/errors.hpp"
#include "ebcast/sweep.hpp"

#include <doctest.h>

#include <set>

using namespace ebcast;

namespace {

const SweepRow* find_row(const SweepReport& r, const std::string& params, const std::string& quantity) {
    for (const auto& row : r.rows)
        if (row.params == params && row.quantity == quantity) return &row;
    return nullptr;
}

}  // namespace

TEST_CASE("suite names") {
    CHECK(parse_suites("all").size() == 6);
    CHECK(parse_suites("lex") == std::vector<Suite>{Suite::lex});
    CHECK_THROWS_AS(parse_suites("nope"), InvalidParameter);
}

TEST_CASE("cycle suite: one agreeing row per cycle") {
    const auto r = sweep({Suite::cycles});
    CHECK(r.rows.size() == 18);
    CHECK(r.agreeing() == 18);
    CHECK(r.ok());
}

TEST_CASE("lex suite flags m = 8 as the only expected discrepancy") {
    const auto r = sweep({Suite::lex});
    CHECK(r.ok());
    CHECK(r.expected_discrepancies() == 1);
    const auto* row = find_row(r, "m=8;h=4", "mcr_case_table");
    REQUIRE(row != nullptr);
    CHECK(row->expected_discrepancy);
    CHECK(row->solver == "4");
}

TEST_CASE("bounds suite flags C_5 on the upper side as expected") {
    const auto r = sweep({Suite::bounds});
    const auto* row = find_row(r, "C_5", "eb2_upper_bound");
    REQUIRE(row != nullptr);
    CHECK(row->expected_discrepancy);
    CHECK_FALSE(row->agree);
}

TEST_CASE("reports are deterministic across worker counts") {
    SweepOptions serial;
    SweepOptions parallel;
    parallel.jobs = 3;
    const auto a = sweep({Suite::paths, Suite::stars}, serial);
    const auto b = sweep({Suite::paths, Suite::stars}, parallel);
    CHECK(a.to_csv() == b.to_csv());
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_csv().rfind("family,params,quantity,formula,solver,agree,note\n", 0) == 0);
}

TEST_CASE("CSV quoting") {
    SweepReport r;
    r.rows.push_back({"corpus", "K_1,3", "q", "say \"hi\"", "1", true, ""});
    CHECK(r.to_csv().find("\"K_1,3\",q,\"say \"\"hi\"\"\"") != std::string::npos);
}

TEST_CASE("corpus graphs are small and uniquely named") {
    const auto corpus = standard_corpus();
    std::set<std::string> names;
    for (const auto& g : corpus) {
        CHECK(g.graph.vertex_count() <= 16);
        CHECK(names.insert(g.name).second);
    }
}
