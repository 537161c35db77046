// Test helpers: graph enumerators, random graphs and independent reference
// computations that share no code with the library.
#pragma once

#include "ebcast/graph.hpp"
#include "ebcast/reduction.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using ebcast::Edge;
using ebcast::Graph;

inline bool edges_connected(int n, const std::vector<Edge>& edges) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (auto [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

/// Every connected labeled graph on n vertices (n <= 5 keeps this small).
inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask & (1U << b)) edges.push_back(slots[b]);
        if (edges_connected(n, edges)) out.emplace_back(n, edges);
    }
    return out;
}

/// Random connected graph: a random spanning tree plus extra edges with
/// probability p.
inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (int v = 1; v < n; ++v) {
        const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace_back(u, v);
        seen.emplace(u, v);
    }
    std::bernoulli_distribution extra(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!seen.count({u, v}) && extra(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Floyd-Warshall distances; INT_MAX / 4 marks unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = INT_MAX / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    return d;
}

/// Every formula with `n` variables and `m` distinct clauses, each clause on
/// three distinct variables in increasing order with any sign pattern.
inline std::vector<ebcast::CnfFormula> all_cnfs(int n, int m) {
    std::vector<ebcast::Clause> pool;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int signs = 0; signs < 8; ++signs)
                    pool.push_back({ebcast::Literal{a, (signs & 1) != 0},
                                    ebcast::Literal{b, (signs & 2) != 0},
                                    ebcast::Literal{c, (signs & 4) != 0}});
    std::vector<ebcast::CnfFormula> out;
    std::vector<int> pick(m);
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == m) {
            ebcast::CnfFormula f{n, {}};
            for (int i : pick) f.clauses.push_back(pool[i]);
            out.push_back(std::move(f));
            return;
        }
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            pick[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Unbounded coin DP: can `total` be written as a sum of `parts`?
inline bool sums_to(int total, const std::vector<int>& parts) {
    std::vector<char> ok(total + 1, 0);
    ok[0] = 1;
    for (int p : parts)
        for (int s = p; s <= total; ++s) ok[s] = ok[s] || ok[s - p];
    return ok[total] != 0;
}

}  // namespace testsupport
