#include "ebcast/solver.hpp"

#include "ebcast/errors.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <string>

namespace ebcast {
namespace {

using Word = std::uint64_t;

// Balls as bit masks plus, per vertex, the ids of the balls containing it.
struct SearchAtoms {
    int n = 0;
    int words = 0;
    int k = 0;
    std::vector<Ball> balls;
    std::vector<Word> masks;
    std::vector<std::vector<int>> containing;
    int max_size = 1;
    // Smallest radius/size ratio over all balls, kept as a fraction.
    long long ratio_num = 1;
    long long ratio_den = 1;

    const Word* mask(int b) const { return masks.data() + static_cast<std::size_t>(b) * words; }
};

// With `merge_equal_sets`, balls covering the same vertex set collapse to the
// one with the smallest (radius, center); the survivors keep (center, radius)
// order. Every objective except full enumeration is invariant under this.
SearchAtoms make_atoms(const Graph& g, const DistanceMatrix& d, int k, bool forbid_cost_one,
                       bool merge_equal_sets) {
    SearchAtoms atoms;
    atoms.n = g.vertex_count();
    atoms.words = (atoms.n + 63) / 64;
    atoms.k = k;

    auto balls = enumerate_balls(g, d, k, forbid_cost_one);
    auto to_mask = [&](const Ball& b) {
        std::vector<Word> m(atoms.words, 0);
        for (Vertex v : b.covered) m[v / 64] |= Word{1} << (v % 64);
        return m;
    };

    if (merge_equal_sets) {
        std::map<std::vector<Word>, std::size_t> keep;
        for (std::size_t i = 0; i < balls.size(); ++i) {
            auto [it, inserted] = keep.try_emplace(to_mask(balls[i]), i);
            if (!inserted && balls[i].radius < balls[it->second].radius) it->second = i;
        }
        std::vector<std::size_t> survivors;
        for (const auto& entry : keep) survivors.push_back(entry.second);
        std::sort(survivors.begin(), survivors.end());
        std::vector<Ball> kept;
        for (auto i : survivors) kept.push_back(std::move(balls[i]));
        balls = std::move(kept);
    }

    atoms.containing.resize(atoms.n);
    for (std::size_t b = 0; b < balls.size(); ++b) {
        const auto m = to_mask(balls[b]);
        atoms.masks.insert(atoms.masks.end(), m.begin(), m.end());
        for (Vertex v : balls[b].covered) atoms.containing[v].push_back(static_cast<int>(b));
        const long long size = static_cast<long long>(balls[b].covered.size());
        atoms.max_size = std::max(atoms.max_size, static_cast<int>(size));
        if (b == 0 || balls[b].radius * atoms.ratio_den < atoms.ratio_num * size) {
            atoms.ratio_num = balls[b].radius;
            atoms.ratio_den = size;
        }
    }
    atoms.balls = std::move(balls);
    return atoms;
}

class Search {
public:
    Search(const SearchAtoms& atoms, std::uint64_t node_limit)
        : atoms_(atoms), node_limit_(node_limit), blocked_(atoms.words, 0) {}

    std::uint64_t nodes() const noexcept { return nodes_; }
    bool exhausted() const noexcept { return exhausted_; }

    // Exact cover. `on_solution(cost)` returns true to stop the search;
    // `prune(cost, uncovered)` cuts a branch.
    template <class OnSolution, class Prune>
    bool cover(long long cost, int uncovered, OnSolution& on_solution, Prune& prune) {
        if (!tick()) return true;
        if (uncovered == 0) return on_solution(cost);
        if (prune(cost, uncovered)) return false;

        int pick = -1;
        int pick_count = INT_MAX;
        for (Vertex v = 0; v < atoms_.n; ++v) {
            if (is_blocked(v)) continue;
            int count = 0;
            for (int b : atoms_.containing[v]) {
                if (free(b) && ++count >= pick_count) break;
            }
            if (count == 0) return false;
            if (count < pick_count) {
                pick = v;
                pick_count = count;
                if (count == 1) break;
            }
        }
        for (int b : atoms_.containing[pick]) {
            if (!free(b)) continue;
            take(b);
            const bool stop = cover(cost + atoms_.balls[b].radius,
                                    uncovered - static_cast<int>(atoms_.balls[b].covered.size()),
                                    on_solution, prune);
            release(b);
            if (stop) return true;
        }
        return false;
    }

    // Disjoint-ball packing with explicit skips; records the best covered
    // count in `best` / `best_chosen`.
    bool pack(int covered, int undecided, int& best, std::vector<int>& best_chosen) {
        if (!tick()) return true;
        if (covered + undecided <= best) return false;
        if (undecided == 0) {
            best = covered;
            best_chosen = chosen_;
            return best == atoms_.n;
        }
        Vertex v = atoms_.n - 1;
        while (is_blocked(v)) --v;
        for (int b : atoms_.containing[v]) {
            if (!free(b)) continue;
            const int size = static_cast<int>(atoms_.balls[b].covered.size());
            take(b);
            const bool stop = pack(covered + size, undecided - size, best, best_chosen);
            release(b);
            if (stop) return true;
        }
        set_bit(v);
        const bool stop = pack(covered, undecided - 1, best, best_chosen);
        clear_bit(v);
        return stop;
    }

    const std::vector<int>& chosen() const noexcept { return chosen_; }

private:
    bool tick() {
        if (nodes_ >= node_limit_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    bool is_blocked(Vertex v) const { return (blocked_[v / 64] >> (v % 64)) & 1U; }
    void set_bit(Vertex v) { blocked_[v / 64] |= Word{1} << (v % 64); }
    void clear_bit(Vertex v) { blocked_[v / 64] &= ~(Word{1} << (v % 64)); }

    bool free(int b) const {
        const Word* m = atoms_.mask(b);
        for (int w = 0; w < atoms_.words; ++w) {
            if (m[w] & blocked_[w]) return false;
        }
        return true;
    }
    void take(int b) {
        const Word* m = atoms_.mask(b);
        for (int w = 0; w < atoms_.words; ++w) blocked_[w] |= m[w];
        chosen_.push_back(b);
    }
    void release(int b) {
        const Word* m = atoms_.mask(b);
        for (int w = 0; w < atoms_.words; ++w) blocked_[w] &= ~m[w];
        chosen_.pop_back();
    }

    const SearchAtoms& atoms_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Word> blocked_;
    std::vector<int> chosen_;
};

Broadcast to_broadcast(const SearchAtoms& atoms, const std::vector<int>& chosen) {
    std::vector<int> costs(atoms.n, 0);
    for (int b : chosen) costs[atoms.balls[b].center] = atoms.balls[b].radius;
    return Broadcast(std::move(costs), atoms.k);
}

void require_k(int k) {
    if (k < 1) throw InvalidParameter("k must be >= 1, got " + std::to_string(k));
}

SolveResult solve_exists(const Graph& g, const DistanceMatrix& d, int k, bool forbid_cost_one,
                         const SolveOptions& options) {
    require_k(k);
    const auto atoms = make_atoms(g, d, k, forbid_cost_one, true);
    Search search(atoms, options.node_limit);
    std::optional<Broadcast> witness;
    auto on_solution = [&](long long) {
        witness = to_broadcast(atoms, search.chosen());
        return true;
    };
    auto no_prune = [](long long, int) { return false; };
    search.cover(0, atoms.n, on_solution, no_prune);

    SolveResult r;
    r.objective = Objective::exists;
    r.nodes_explored = search.nodes();
    r.exhausted = search.exhausted() && !witness;
    r.feasible = witness.has_value();
    if (r.feasible) {
        r.value = 1;
        r.witness = std::move(witness);
    } else if (!r.exhausted) {
        r.value = 0;
    }
    return r;
}

DistanceMatrix lenient_distances(const Graph& g) {
    return all_pairs_distances(g, Connectivity::allow_disconnected);
}

}  // namespace

const char* to_string(Objective objective) noexcept {
    switch (objective) {
        case Objective::exists: return "exists";
        case Objective::min_cost: return "min_cost";
        case Objective::max_coverage: return "max_coverage";
        case Objective::mcr: return "mcr";
        case Objective::min_k_without_cost_one: return "min_k_without_cost_one";
    }
    return "?";
}

std::vector<Ball> enumerate_balls(const Graph& g, const DistanceMatrix& d, int k,
                                  bool forbid_cost_one) {
    require_k(k);
    std::vector<Ball> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::size_t previous_size = 0;
        for (int r = forbid_cost_one ? 2 : 1; r <= k; ++r) {
            Ball b = ball(g, d, v, r);
            // Balls at one center are nested, so equal sets means equal size.
            if (b.covered.size() == previous_size) continue;
            previous_size = b.covered.size();
            out.push_back(std::move(b));
        }
    }
    return out;
}

SolveResult exists_k_eldb(const Graph& g, int k, const SolveOptions& options) {
    return solve_exists(g, lenient_distances(g), k, false, options);
}

SolveResult exists_k_eldb_without_cost_one(const Graph& g, int k, const SolveOptions& options) {
    if (k < 2) throw InvalidParameter("cost-one-free search needs k >= 2");
    return solve_exists(g, lenient_distances(g), k, true, options);
}

SolveResult gamma_ebk(const Graph& g, int k, const SolveOptions& options) {
    require_k(k);
    const auto atoms = make_atoms(g, lenient_distances(g), k, false, true);
    Search search(atoms, options.node_limit);

    long long best = LLONG_MAX;
    std::optional<Broadcast> witness;
    auto on_solution = [&](long long cost) {
        if (cost < best) {
            best = cost;
            witness = to_broadcast(atoms, search.chosen());
        }
        return false;
    };
    // Each ball costs >= 1 and covers <= max_size vertices; and total cost is
    // at least the uncovered count times the cheapest radius/size ratio.
    auto prune = [&](long long cost, int uncovered) {
        const long long by_count = (uncovered + atoms.max_size - 1) / atoms.max_size;
        const long long by_ratio =
            (uncovered * atoms.ratio_num + atoms.ratio_den - 1) / atoms.ratio_den;
        return cost + std::max(by_count, by_ratio) >= best;
    };
    search.cover(0, atoms.n, on_solution, prune);

    SolveResult r;
    r.objective = Objective::min_cost;
    r.nodes_explored = search.nodes();
    r.exhausted = search.exhausted();
    r.feasible = witness.has_value() && !r.exhausted;
    if (r.feasible) {
        r.value = best;
        r.witness = std::move(witness);
    }
    return r;
}

SolveResult f_k(const Graph& g, int k, const SolveOptions& options) {
    require_k(k);
    const auto atoms = make_atoms(g, lenient_distances(g), k, false, true);
    Search search(atoms, options.node_limit);
    int best = -1;
    std::vector<int> best_chosen;
    search.pack(0, atoms.n, best, best_chosen);

    SolveResult r;
    r.objective = Objective::max_coverage;
    r.nodes_explored = search.nodes();
    r.exhausted = search.exhausted() && best != atoms.n;
    r.feasible = !r.exhausted;
    if (r.feasible) {
        r.value = best;
        r.witness = to_broadcast(atoms, best_chosen);
    }
    return r;
}

SolveResult mcr(const Graph& g, const SolveOptions& options) {
    const auto d = all_pairs_distances(g);
    SolveResult r;
    r.objective = Objective::mcr;
    SolveOptions remaining = options;
    for (int k = 1; k <= d.radius(); ++k) {
        auto step = solve_exists(g, d, k, false, remaining);
        r.nodes_explored += step.nodes_explored;
        remaining.node_limit -= step.nodes_explored;
        if (step.exhausted) {
            r.exhausted = true;
            return r;
        }
        if (step.feasible) {
            r.feasible = true;
            r.value = k;
            r.witness = std::move(step.witness);
            return r;
        }
    }
    throw std::logic_error("no k-ELDB found up to the radius; a center ball must exist");
}

SolveResult min_k_without_cost_one(const Graph& g, const SolveOptions& options) {
    const auto d = all_pairs_distances(g);
    SolveResult r;
    r.objective = Objective::min_k_without_cost_one;
    SolveOptions remaining = options;
    for (int k = 2; k <= std::max(2, d.radius()); ++k) {
        auto step = solve_exists(g, d, k, true, remaining);
        r.nodes_explored += step.nodes_explored;
        remaining.node_limit -= step.nodes_explored;
        if (step.exhausted) {
            r.exhausted = true;
            return r;
        }
        if (step.feasible) {
            r.feasible = true;
            r.value = k;
            r.witness = std::move(step.witness);
            return r;
        }
    }
    throw std::logic_error("no cost-one-free k-ELDB found; a center ball must exist");
}

std::vector<Broadcast> enumerate_k_eldbs(const Graph& g, int k, std::size_t max_solutions) {
    require_k(k);
    const auto atoms = make_atoms(g, lenient_distances(g), k, false, false);
    Search search(atoms, UINT64_MAX);
    std::vector<Broadcast> out;
    auto on_solution = [&](long long) {
        out.push_back(to_broadcast(atoms, search.chosen()));
        return out.size() >= max_solutions;
    };
    auto no_prune = [](long long, int) { return false; };
    search.cover(0, atoms.n, on_solution, no_prune);
    return out;
}

SolveResult brute_force_oracle(const Graph& g, int k, Objective objective,
                               const OracleLimits& limits) {
    require_k(k);
    const int n = g.vertex_count();
    if (n > limits.max_vertices || k > limits.max_k) {
        throw InvalidParameter("brute-force oracle refuses n=" + std::to_string(n) +
                               ", k=" + std::to_string(k) + " (limits n<=" +
                               std::to_string(limits.max_vertices) +
                               ", k<=" + std::to_string(limits.max_k) + ")");
    }
    if (objective != Objective::exists && objective != Objective::min_cost &&
        objective != Objective::max_coverage) {
        throw InvalidParameter(std::string("brute-force oracle does not support objective ") +
                               to_string(objective));
    }
    const auto d = lenient_distances(g);

    SolveResult r;
    r.objective = objective;
    long long best = objective == Objective::max_coverage ? -1 : LLONG_MAX;
    std::vector<int> costs(n, 0);
    while (true) {
        ++r.nodes_explored;
        Broadcast f(costs, k);
        const auto report = classify(g, d, f);
        if (objective == Objective::max_coverage) {
            if (report.is_efficient && report.coverage_count > best) {
                best = report.coverage_count;
                r.witness = f;
            }
        } else if (report.is_k_eldb && report.cost < best) {
            best = report.cost;
            r.witness = f;
            if (objective == Objective::exists) break;
        }
        // Odometer increment over {0..k}^n.
        int i = 0;
        while (i < n && costs[i] == k) costs[i++] = 0;
        if (i == n) break;
        ++costs[i];
    }
    r.feasible = r.witness.has_value();
    if (r.feasible) r.value = objective == Objective::exists ? 1 : best;
    else if (objective == Objective::exists) r.value = 0;
    return r;
}

}  // namespace ebcast
