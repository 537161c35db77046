#include "ebcast/reduction.hpp"

#include "ebcast/distance.hpp"
#include "ebcast/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ebcast {
namespace {

std::string literal_name(const Literal& l) {
    return (l.negated ? "-" : "") + std::to_string(l.variable);
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool to_int(std::string_view s, long long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

void validate(const CnfFormula& cnf) {
    if (cnf.variable_count < 1) throw InvalidParameter("formula needs at least one variable");
    for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
        const auto& c = cnf.clauses[j];
        for (const auto& l : c) {
            if (l.variable < 1 || l.variable > cnf.variable_count) {
                throw InvalidParameter("clause " + std::to_string(j + 1) + " uses variable " +
                                       std::to_string(l.variable) + " outside 1.." +
                                       std::to_string(cnf.variable_count));
            }
        }
        if (c[0].variable == c[1].variable || c[0].variable == c[2].variable ||
            c[1].variable == c[2].variable) {
            throw InvalidParameter("clause " + std::to_string(j + 1) +
                                   " repeats a variable");
        }
    }
}

CnfFormula parse_cnf(std::string_view text) {
    using Kind = ParseError::Kind;
    CnfFormula cnf;
    bool header = false;
    long long declared_clauses = 0;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        start = end + 1;
        ++number;

        const auto parts = tokens(line);
        if (parts.empty() || parts[0].front() == 'c') continue;
        if (parts[0] == "p") {
            long long n = 0;
            if (header || parts.size() != 4 || parts[1] != "cnf" || !to_int(parts[2], n) ||
                !to_int(parts[3], declared_clauses) || n < 1 || declared_clauses < 0) {
                throw ParseError(Kind::malformed, number, "expected a single 'p cnf n m' header");
            }
            cnf.variable_count = static_cast<int>(n);
            header = true;
            continue;
        }
        if (!header) throw ParseError(Kind::malformed, number, "clause before 'p cnf' header");

        std::vector<long long> values;
        for (auto p : parts) {
            long long v = 0;
            if (!to_int(p, v)) {
                throw ParseError(Kind::malformed, number, "not an integer: '" + std::string(p) + "'");
            }
            values.push_back(v);
        }
        if (values.back() != 0) {
            throw ParseError(Kind::malformed, number, "clause line must end with 0");
        }
        values.pop_back();
        if (std::find(values.begin(), values.end(), 0) != values.end()) {
            throw ParseError(Kind::malformed, number, "0 inside a clause");
        }
        if (values.size() != 3) {
            throw ParseError(Kind::clause_width, number,
                             "clause has " + std::to_string(values.size()) +
                                 " literals, expected 3");
        }
        Clause clause;
        for (int i = 0; i < 3; ++i) {
            const long long var = values[i] < 0 ? -values[i] : values[i];
            if (var > cnf.variable_count) {
                throw ParseError(Kind::out_of_range, number,
                                 "variable " + std::to_string(var) + " outside 1.." +
                                     std::to_string(cnf.variable_count));
            }
            clause[i] = Literal{static_cast<int>(var), values[i] < 0};
        }
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                if (clause[a].variable != clause[b].variable) continue;
                if (clause[a].negated != clause[b].negated) {
                    throw ParseError(Kind::tautology, number,
                                     "clause contains variable " +
                                         std::to_string(clause[a].variable) +
                                         " and its negation");
                }
                throw ParseError(Kind::repeated_variable, number,
                                 "clause repeats variable " + std::to_string(clause[a].variable));
            }
        }
        cnf.clauses.push_back(clause);
    }
    if (!header) throw ParseError(Kind::malformed, 0, "missing 'p cnf' header");
    if (static_cast<long long>(cnf.clauses.size()) != declared_clauses) {
        throw ParseError(Kind::malformed, 0,
                         "header declares " + std::to_string(declared_clauses) +
                             " clauses, found " + std::to_string(cnf.clauses.size()));
    }
    return cnf;
}

std::string serialize_cnf(const CnfFormula& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.variable_count << ' ' << cnf.clauses.size() << '\n';
    for (const auto& c : cnf.clauses) {
        out << literal_name(c[0]) << ' ' << literal_name(c[1]) << ' ' << literal_name(c[2])
            << " 0\n";
    }
    return out.str();
}

bool exactly_one_true(const CnfFormula& cnf, const Assignment& assignment) {
    if (static_cast<int>(assignment.size()) != cnf.variable_count) {
        throw InvalidInput("assignment length does not match the variable count");
    }
    for (const auto& c : cnf.clauses) {
        int true_count = 0;
        for (const auto& l : c) {
            if (assignment[l.variable - 1] != l.negated) ++true_count;
        }
        if (true_count != 1) return false;
    }
    return true;
}

std::vector<Assignment> x3sat_brute(const CnfFormula& cnf) {
    validate(cnf);
    if (cnf.variable_count > 20) {
        throw InvalidParameter("x3sat_brute refuses more than 20 variables");
    }
    std::vector<Assignment> out;
    const std::uint32_t total = std::uint32_t{1} << cnf.variable_count;
    Assignment a(cnf.variable_count);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < cnf.variable_count; ++i) a[i] = (mask >> i) & 1U;
        if (exactly_one_true(cnf, a)) out.push_back(a);
    }
    return out;
}

Vertex ReductionGraph::literal_vertex(const Literal& literal) const {
    const auto i = static_cast<std::size_t>(literal.variable - 1);
    return literal.negated ? neg_vertex.at(i) : pos_vertex.at(i);
}

long long expected_vertex_count(const CnfFormula& cnf, int k) {
    return (3LL * k - 2) * static_cast<long long>(cnf.clauses.size()) +
           (4LL * k - 2) * cnf.variable_count;
}

ReductionGraph build_reduction(const CnfFormula& cnf, int k) {
    if (k < 2) throw InvalidParameter("reduction gadget needs k >= 2, got " + std::to_string(k));
    validate(cnf);

    const Graph tk = build_tk(k);
    const int block = tk.vertex_count();
    const int n = cnf.variable_count;
    const int m = static_cast<int>(cnf.clauses.size());
    const int clause_base = n * block;
    const int path_base = clause_base + m;
    const int total = path_base + 3 * m * (k - 1);

    std::vector<Edge> edges;
    std::vector<std::string> labels(total);
    std::vector<Vertex> pos(n);
    std::vector<Vertex> neg(n);
    for (int i = 0; i < n; ++i) {
        const int offset = i * block;
        for (auto [u, v] : tk.edges()) edges.emplace_back(offset + u, offset + v);
        for (Vertex v = 0; v < block; ++v) {
            labels[offset + v] = "tk:" + std::to_string(i + 1) + ":" + std::to_string(v);
        }
        pos[i] = offset;
        neg[i] = offset + 1;
        labels[pos[i]] = "pos:" + std::to_string(i + 1);
        labels[neg[i]] = "neg:" + std::to_string(i + 1);
    }

    std::vector<Vertex> clause_vertex(m);
    std::vector<std::array<std::vector<Vertex>, 3>> paths(m);
    for (int j = 0; j < m; ++j) {
        clause_vertex[j] = clause_base + j;
        labels[clause_vertex[j]] = "clause:" + std::to_string(j + 1);
        for (int l = 0; l < 3; ++l) {
            const auto& literal = cnf.clauses[j][l];
            Vertex previous = clause_vertex[j];
            for (int t = 1; t <= k - 1; ++t) {
                const Vertex v = path_base + (j * 3 + l) * (k - 1) + (t - 1);
                labels[v] = "path:" + std::to_string(j + 1) + ":" + std::to_string(l + 1) + ":" +
                            std::to_string(t);
                paths[j][l].push_back(v);
                edges.emplace_back(previous, v);
                previous = v;
            }
            const auto i = static_cast<std::size_t>(literal.variable - 1);
            edges.emplace_back(previous, literal.negated ? neg[i] : pos[i]);
        }
    }

    return ReductionGraph{
        Graph(total, edges, std::move(labels), Connectivity::allow_disconnected),
        k,
        std::move(pos),
        std::move(neg),
        std::move(clause_vertex),
        std::move(paths),
    };
}

Broadcast assignment_to_broadcast(const ReductionGraph& rg, const Assignment& assignment) {
    if (assignment.size() != rg.pos_vertex.size()) {
        throw InvalidInput("assignment length does not match the variable count");
    }
    std::vector<int> costs(rg.graph.vertex_count(), 0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        costs[assignment[i] ? rg.pos_vertex[i] : rg.neg_vertex[i]] = rg.k;
    }
    return Broadcast(std::move(costs), rg.k);
}

AssignmentRecovery broadcast_to_assignment(const ReductionGraph& rg, const Broadcast& f) {
    const auto d = all_pairs_distances(rg.graph, Connectivity::allow_disconnected);
    if (f.size() != rg.graph.vertex_count() || !classify(rg.graph, d, f).is_k_eldb) {
        throw PreconditionError("broadcast is not a k-ELDB of the gadget graph");
    }
    AssignmentRecovery out;
    const std::size_t n = rg.pos_vertex.size();
    Assignment assignment(n);
    std::vector<bool> literal_center(rg.graph.vertex_count(), false);
    for (std::size_t i = 0; i < n; ++i) {
        literal_center[rg.pos_vertex[i]] = true;
        literal_center[rg.neg_vertex[i]] = true;
        const int p = f[rg.pos_vertex[i]];
        const int q = f[rg.neg_vertex[i]];
        if (p == rg.k && q == 0) {
            assignment[i] = true;
        } else if (p == 0 && q == rg.k) {
            assignment[i] = false;
        } else {
            out.rejection = "variable " + std::to_string(i + 1) + " has literal costs (" +
                            std::to_string(p) + "," + std::to_string(q) + ")";
            return out;
        }
    }
    for (Vertex v : f.broadcasters()) {
        if (!literal_center[v]) {
            out.rejection = "broadcaster " + rg.graph.label(v) + " is not a literal center";
            return out;
        }
    }
    out.assignment = std::move(assignment);
    return out;
}

std::string check_distance_gadget(const ReductionGraph& rg, const CnfFormula& cnf) {
    const auto d = all_pairs_distances(rg.graph, Connectivity::allow_disconnected);
    for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
        const Vertex c = rg.clause_vertex[j];
        std::vector<Vertex> own;
        for (const auto& l : cnf.clauses[j]) own.push_back(rg.literal_vertex(l));
        for (std::size_t i = 0; i < rg.pos_vertex.size(); ++i) {
            for (Vertex center : {rg.pos_vertex[i], rg.neg_vertex[i]}) {
                const bool in_clause = std::find(own.begin(), own.end(), center) != own.end();
                const int dist = d(c, center);
                if (in_clause && dist != rg.k) {
                    return "clause " + std::to_string(j + 1) + " is at distance " +
                           std::to_string(dist) + " from its literal " + rg.graph.label(center);
                }
                if (!in_clause && dist <= rg.k) {
                    return "clause " + std::to_string(j + 1) + " is within k of foreign literal " +
                           rg.graph.label(center);
                }
            }
        }
    }
    return {};
}

bool ReductionReport::passed() const {
    return vertex_count == expected_vertex_count && distance_property && roundtrip_ok &&
           witness_shape_ok.value_or(true) && equivalence_holds.value_or(false);
}

ReductionReport verify_reduction(const CnfFormula& cnf, int k, const SolveOptions& options) {
    const auto rg = build_reduction(cnf, k);
    const auto d = all_pairs_distances(rg.graph, Connectivity::allow_disconnected);

    ReductionReport report;
    report.variable_count = cnf.variable_count;
    report.clause_count = static_cast<int>(cnf.clauses.size());
    report.k = k;
    report.vertex_count = rg.graph.vertex_count();
    report.expected_vertex_count = expected_vertex_count(cnf, k);

    if (auto problem = check_distance_gadget(rg, cnf); problem.empty()) {
        report.distance_property = true;
    } else {
        report.notes.push_back(problem);
    }

    const auto satisfying = x3sat_brute(cnf);
    report.satisfying_assignments = satisfying.size();
    report.x3sat_satisfiable = !satisfying.empty();
    for (const auto& a : satisfying) {
        const auto f = assignment_to_broadcast(rg, a);
        if (!classify(rg.graph, d, f).is_k_eldb) {
            report.roundtrip_ok = false;
            report.notes.push_back("a satisfying assignment does not map to a k-ELDB");
            break;
        }
        const auto back = broadcast_to_assignment(rg, f);
        if (!back.assignment || *back.assignment != a) {
            report.roundtrip_ok = false;
            report.notes.push_back("assignment -> broadcast -> assignment is not the identity");
            break;
        }
    }

    const auto solved = exists_k_eldb(rg.graph, k, options);
    report.nodes_explored = solved.nodes_explored;
    report.solver_exhausted = solved.exhausted;
    if (solved.exhausted) {
        report.notes.push_back("solver exhausted its node budget; verdict withheld");
        return report;
    }
    report.solver_feasible = solved.feasible;
    report.equivalence_holds = solved.feasible == report.x3sat_satisfiable;
    if (solved.witness) {
        const auto back = broadcast_to_assignment(rg, *solved.witness);
        if (back.assignment) {
            report.witness_assignment = back.assignment;
            report.witness_shape_ok = exactly_one_true(cnf, *back.assignment);
            if (!*report.witness_shape_ok) {
                report.notes.push_back("recovered assignment is not exactly-one satisfying");
            }
        } else {
            report.witness_shape_ok = false;
            report.notes.push_back("solver witness rejected: " + back.rejection);
        }
    }
    return report;
}

}  // namespace ebcast
