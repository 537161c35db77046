// ebcast - command-line front end for the broadcast domination toolkit.
//
// Exit status: 0 success/feasible, 1 error or disagreement, 2 infeasible,
// 3 solver budget exhausted.
#include "ebcast/distance.hpp"
#include "ebcast/errors.hpp"
#include "ebcast/formulas.hpp"
#include "ebcast/graph.hpp"
#include "ebcast/graph_io.hpp"
#include "ebcast/reduction.hpp"
#include "ebcast/serialize.hpp"
#include "ebcast/solver.hpp"
#include "ebcast/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace ebcast;

namespace {

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitExhausted = 3;

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

struct GenArgs {
    std::string family;
    std::string product;
    std::string left;
    std::string right;
    int n = 0;
    int k = 0;
    int i = 0;
    std::string out;
    std::string labels;
};

int run_gen(const GenArgs& a) {
    std::optional<Graph> g;
    if (!a.product.empty()) {
        if (a.left.empty() || a.right.empty()) {
            throw InvalidParameter("--product needs --left and --right graph files");
        }
        g = product(parse_product_kind(a.product), load_graph(a.left), load_graph(a.right));
    } else if (a.family == "tk") {
        g = build_tk(a.k);
    } else if (a.family == "subdivided-star") {
        g = subdivided_star(a.i, a.n);
    } else if (!a.family.empty()) {
        g = generate(parse_family(a.family), a.n);
    } else {
        throw InvalidParameter("gen needs --family or --product");
    }

    emit(a.out, serialize_graph(*g));
    if (!a.labels.empty()) write_file(a.labels, serialize_labels(*g));

    const auto d = all_pairs_distances(*g);
    std::ostream& info = a.out.empty() ? std::cerr : std::cout;
    info << "n=" << g->vertex_count() << " m=" << g->edge_count() << " radius=" << d.radius()
         << " diameter=" << d.diameter() << '\n';
    return 0;
}

struct SolveArgs {
    std::string graph;
    std::string objective;
    std::optional<int> k;
    std::uint64_t node_limit = SolveOptions{}.node_limit;
    std::string out;
};

int run_solve(const SolveArgs& a) {
    const Graph g = load_graph(a.graph);
    const SolveOptions opt{a.node_limit};
    auto need_k = [&]() {
        if (!a.k) throw InvalidParameter("objective '" + a.objective + "' needs --k");
        return *a.k;
    };

    SolveResult r;
    if (a.objective == "exists") {
        r = exists_k_eldb(g, need_k(), opt);
    } else if (a.objective == "mincost") {
        r = gamma_ebk(g, need_k(), opt);
    } else if (a.objective == "maxcover") {
        r = f_k(g, need_k(), opt);
    } else if (a.objective == "mcr") {
        r = mcr(g, opt);
    } else if (a.objective == "mincost-no1") {
        r = min_k_without_cost_one(g, opt);
    } else {
        throw InvalidParameter("unknown objective '" + a.objective + "'");
    }

    emit(a.out, to_json(r).dump(2) + "\n");
    if (r.exhausted) return kExitExhausted;
    return r.feasible ? 0 : kExitInfeasible;
}

struct SweepArgs {
    std::string suite = "all";
    std::string format = "json";
    std::string out;
    unsigned jobs = 1;
    std::uint64_t node_limit = SolveOptions{}.node_limit;
};

int run_sweep(const SweepArgs& a) {
    SweepOptions opt;
    opt.solve.node_limit = a.node_limit;
    opt.jobs = a.jobs;
    const auto report = sweep(parse_suites(a.suite), opt);
    emit(a.out, a.format == "csv" ? report.to_csv() : report.to_json());
    std::cerr << report.rows.size() << " rows, " << report.agreeing() << " agree, "
              << report.expected_discrepancies() << " expected discrepancies, "
              << report.unexpected_disagreements() << " unexpected disagreements, "
              << report.exhausted() << " exhausted\n";
    return report.ok() ? 0 : kExitError;
}

struct ReduceArgs {
    std::string cnf;
    int k = 2;
    std::string out;
    std::string labels;
    std::uint64_t node_limit = SolveOptions{}.node_limit;
};

int run_reduce(const ReduceArgs& a) {
    const auto cnf = parse_cnf(read_file(a.cnf));
    const auto rg = build_reduction(cnf, a.k);
    emit(a.out, serialize_graph(rg.graph));
    if (!a.labels.empty()) write_file(a.labels, serialize_labels(rg.graph));
    std::ostream& info = a.out.empty() ? std::cerr : std::cout;
    info << "n=" << rg.graph.vertex_count() << " m=" << rg.graph.edge_count()
         << " expected_n=" << expected_vertex_count(cnf, a.k) << '\n';
    return 0;
}

int run_verify_reduction(const ReduceArgs& a) {
    const auto cnf = parse_cnf(read_file(a.cnf));
    const auto report = verify_reduction(cnf, a.k, SolveOptions{a.node_limit});
    emit(a.out, to_json(report).dump(2) + "\n");
    if (report.solver_exhausted) return kExitExhausted;
    return report.passed() ? 0 : kExitError;
}

struct CheckArgs {
    std::string family;
    int n = 0;
    int m = 0;
    int k = 1;
    int i = 0;
    std::uint64_t node_limit = SolveOptions{}.node_limit;
    std::string out;
};

bool agrees(const FormulaResult& f, const SolveResult& s) {
    if (!f.applicable || s.exhausted || !s.feasible || !s.value) return false;
    if (f.kind == BoundKind::lower_bound) return *s.value >= f.integer();
    return *s.value == f.integer();
}

int run_check(const CheckArgs& a) {
    const SolveOptions opt{a.node_limit};
    Json rows = Json::array();
    bool all_agree = true;
    auto add = [&](const std::string& quantity, const FormulaResult& f, const SolveResult& s) {
        const bool ok = agrees(f, s);
        all_agree = all_agree && ok;
        rows.push_back(Json{{"quantity", quantity},
                            {"formula", to_json(f)},
                            {"solver", to_json(s)},
                            {"agree", ok}});
    };

    Json params = Json::object();
    if (a.family == "path") {
        params = {{"n", a.n}, {"k", a.k}};
        add("gamma_ebk", path_gamma(a.n, a.k), gamma_ebk(generate(Family::path, a.n), a.k, opt));
    } else if (a.family == "cycle") {
        params = {{"n", a.n}};
        const Graph g = generate(Family::cycle, a.n);
        const auto f = cycle_mcr(a.n);
        add("mcr", f, mcr(g, opt));
        add("gamma_at_mcr", cycle_gamma(a.n), gamma_ebk(g, static_cast<int>(f.integer()), opt));
    } else if (a.family == "subdivided-star") {
        params = {{"i", a.i}, {"n", a.n}};
        const Graph g = subdivided_star(a.i, a.n);
        add("mcr", subdivided_star_mcr(a.i, a.n), mcr(g, opt));
        add("gamma_eb1", subdivided_star_gamma(a.i, a.n), gamma_ebk(g, 1, opt));
    } else if (a.family == "lex-path" || a.family == "lex-cycle") {
        // G = P_m or C_m, H = P_n.
        params = {{"m", a.m}, {"n", a.n}};
        const Graph h = generate(Family::path, a.n);
        const int rad_h = all_pairs_distances(h).radius();
        if (a.family == "lex-path") {
            const Graph g = product(ProductKind::lexicographic, generate(Family::path, a.m), h);
            const auto f = lex_path(a.m, rad_h);
            add("mcr", f.mcr, mcr(g, opt));
            if (f.gamma_eb2.applicable) add("gamma_eb2", f.gamma_eb2, gamma_ebk(g, 2, opt));
        } else {
            const Graph g = product(ProductKind::lexicographic, generate(Family::cycle, a.m), h);
            const auto f = lex_cycle_mcr(a.m, rad_h);
            const auto s = mcr(g, opt);
            add("mcr_case_table", f.case_table, s);
            add("mcr_part_sums", f.oracle, s);
        }
    } else if (a.family == "strong-cycle-path") {
        params = {{"m", a.m}, {"n", a.n}};
        StrongParams sp;
        sp.m = a.m;
        const Graph g = product(ProductKind::strong, generate(Family::cycle, a.m),
                                generate(Family::path, a.n));
        add("mcr", strong_mcr(StrongSelector::cycle_times_path, sp).mcr, mcr(g, opt));
    } else {
        throw InvalidParameter("unknown formula family '" + a.family + "'");
    }

    Json doc{{"family", a.family}, {"params", params}, {"rows", rows}, {"agree", all_agree}};
    emit(a.out, doc.dump(2) + "\n");
    return all_agree ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for efficient k-limited broadcast domination"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
    gen_cmd->add_option("--family", gen.family, "path|cycle|complete|star|tk|subdivided-star");
    gen_cmd->add_option("--n", gen.n, "Vertex count (star: n-1 leaves; subdivided-star: n-1 legs)");
    gen_cmd->add_option("--k", gen.k, "T_k order");
    gen_cmd->add_option("--i", gen.i, "Subdivisions per star edge");
    gen_cmd->add_option("--product", gen.product, "lexicographic|strong|cartesian");
    gen_cmd->add_option("--left", gen.left, "Left factor graph file")->check(CLI::ExistingFile);
    gen_cmd->add_option("--right", gen.right, "Right factor graph file")->check(CLI::ExistingFile);
    gen_cmd->add_option("--out", gen.out, "Output graph file (default stdout)");
    gen_cmd->add_option("--labels", gen.labels, "Write vertex labels as JSON");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run the exact solver on a graph");
    solve_cmd->add_option("--graph", solve.graph, "Graph file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--objective", solve.objective, "exists|mincost|maxcover|mcr|mincost-no1")
        ->required()
        ->check(CLI::IsMember({"exists", "mincost", "maxcover", "mcr", "mincost-no1"}));
    solve_cmd->add_option("--k", solve.k, "Cost cap");
    solve_cmd->add_option("--node-limit", solve.node_limit, "Search node budget");
    solve_cmd->add_option("--out", solve.out, "Output JSON file (default stdout)");

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Compare closed forms with the solver");
    sweep_cmd->add_option("--suite", sw.suite, "paths|cycles|stars|lex|strong|bounds|all")
        ->check(CLI::IsMember({"paths", "cycles", "stars", "lex", "strong", "bounds", "all"}));
    sweep_cmd->add_option("--format", sw.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_option("--out", sw.out, "Output file (default stdout)");
    sweep_cmd->add_option("--jobs", sw.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--node-limit", sw.node_limit, "Search node budget per solve");

    ReduceArgs red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the EXACT 3-SAT gadget graph");
    reduce_cmd->add_option("--cnf", red.cnf, "CNF file")->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("--k", red.k, "Cost cap (>= 2)");
    reduce_cmd->add_option("--out", red.out, "Output graph file (default stdout)");
    reduce_cmd->add_option("--labels", red.labels, "Write vertex labels as JSON");

    ReduceArgs ver;
    auto* verify_cmd = app.add_subcommand("verify-reduction", "Check the gadget against X3SAT");
    verify_cmd->add_option("--cnf", ver.cnf, "CNF file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--k", ver.k, "Cost cap (>= 2)");
    verify_cmd->add_option("--node-limit", ver.node_limit, "Search node budget");
    verify_cmd->add_option("--out", ver.out, "Output JSON file (default stdout)");

    CheckArgs chk;
    auto* check_cmd = app.add_subcommand("check-formulas", "Compare one closed form with the solver");
    check_cmd
        ->add_option("--family", chk.family,
                     "path|cycle|subdivided-star|lex-path|lex-cycle|strong-cycle-path")
        ->required();
    check_cmd->add_option("--n", chk.n, "Size parameter");
    check_cmd->add_option("--m", chk.m, "Left factor size for products");
    check_cmd->add_option("--k", chk.k, "Cost cap (path family)");
    check_cmd->add_option("--i", chk.i, "Subdivisions (subdivided-star)");
    check_cmd->add_option("--node-limit", chk.node_limit, "Search node budget");
    check_cmd->add_option("--out", chk.out, "Output JSON file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(solve);
        if (*sweep_cmd) return run_sweep(sw);
        if (*reduce_cmd) return run_reduce(red);
        if (*verify_cmd) return run_verify_reduction(ver);
        if (*check_cmd) return run_check(chk);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
