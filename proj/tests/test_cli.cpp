#include <json.hpp>
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

fs::path workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "ebcast_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args) {
    const auto out = workdir() / "stdout.txt";
    const std::string cmd = "cd " + workdir().string() + " && " EBCAST_BIN " " + args + " > " +
                            out.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out)};
}

void write(const std::string& name, const std::string& text) {
    std::ofstream(workdir() / name) << text;
}

}  // namespace

TEST_CASE("gen writes graph files and prints metrics") {
    auto r = run("gen --family cycle --n 7 --out c7.g");
    CHECK(r.status == 0);
    CHECK(r.out.find("radius=3") != std::string::npos);
    CHECK(slurp(workdir() / "c7.g").rfind("7 7\n", 0) == 0);

    r = run("gen --family tk --k 3 --out t3.g --labels t3.json");
    CHECK(r.status == 0);
    CHECK(r.out.find("n=10") != std::string::npos);
    CHECK(nlohmann::json::parse(slurp(workdir() / "t3.json"))["0"] == "center:0");

    CHECK(run("gen --family path --n 3 --out p3.g").status == 0);
    r = run("gen --product strong --left c7.g --right p3.g --out s.g");
    CHECK(r.status == 0);
    CHECK(r.out.find("n=21") != std::string::npos);

    CHECK(run("gen --family cycle --n 2").status != 0);
    CHECK(run("gen --family cycle --n 7 --bogus").status != 0);
}

TEST_CASE("solve exit codes and values") {
    run("gen --family cycle --n 7 --out c7.g");
    run("gen --family path --n 6 --out p6.g");

    auto r = run("solve --graph c7.g --objective mcr");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == 3);

    r = run("solve --graph p6.g --k 1 --objective mincost");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == 2);

    r = run("solve --graph c7.g --k 2 --objective exists");
    CHECK(r.status == 2);
    CHECK(nlohmann::json::parse(r.out)["feasible"] == false);

    run("gen --family cycle --n 40 --out c40.g");
    r = run("solve --graph c40.g --k 2 --objective mincost --node-limit 5");
    CHECK(r.status == 3);
    CHECK(nlohmann::json::parse(r.out)["exhausted"] == true);

    CHECK(run("solve --graph c7.g --objective exists").status == 1);
    CHECK(run("solve --graph c7.g --objective fastest").status != 0);
}

TEST_CASE("identical invocations are byte-identical") {
    run("gen --family path --n 9 --out p9.g");
    const auto a = run("solve --graph p9.g --k 2 --objective maxcover");
    const auto b = run("solve --graph p9.g --k 2 --objective maxcover");
    CHECK(a.out == b.out);
    const auto c = run("sweep --suite stars --format csv");
    const auto d = run("sweep --suite stars --format csv --jobs 2");
    CHECK(c.status == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("sweep suites") {
    auto r = run("sweep --suite cycles --format json");
    CHECK(r.status == 0);
    const auto rows = nlohmann::json::parse(r.out);
    CHECK(rows.size() == 18);
    for (const auto& row : rows) CHECK(row["agree"] == true);

    r = run("sweep --suite lex --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.find("lex_cycle,m=8;h=4,mcr_case_table,3,4,false,EXPECTED DISCREPANCY") !=
          std::string::npos);

    r = run("sweep --suite bounds --format csv");
    CHECK(r.out.find("corpus,C_5,eb2_upper_bound") != std::string::npos);
    CHECK(r.out.find("EXPECTED DISCREPANCY: known: gamma_eb2(C_5)") != std::string::npos);

    CHECK(run("sweep --suite nope").status != 0);
}

TEST_CASE("reduce and verify-reduction") {
    write("fig2.cnf", "p cnf 5 2\n1 2 3 0\n1 -2 -5 0\n");
    write("single.cnf", "p cnf 3 1\n1 2 3 0\n");
    write("unsat.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    write("bad.cnf", "p cnf 3 1\n1 2 0\n");

    auto r = run("reduce --cnf fig2.cnf --k 2 --out fig2.g --labels fig2.json");
    CHECK(r.status == 0);
    CHECK(r.out.find("n=38") != std::string::npos);

    r = run("verify-reduction --cnf single.cnf --k 2");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["equivalence_holds"] == true);

    r = run("verify-reduction --cnf unsat.cnf --k 2");
    CHECK(r.status == 0);
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["x3sat_satisfiable"] == false);
    CHECK(doc["solver_feasible"] == false);

    CHECK(run("reduce --cnf bad.cnf --k 2").status == 1);
    CHECK(run("reduce --cnf single.cnf --k 1").status == 1);
}

TEST_CASE("check-formulas") {
    auto r = run("check-formulas --family cycle --n 7");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["agree"] == true);
    r = run("check-formulas --family lex-cycle --m 8 --n 4");
    CHECK(r.status == 1);
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["rows"][0]["agree"] == false);
    CHECK(doc["rows"][1]["agree"] == true);
}
