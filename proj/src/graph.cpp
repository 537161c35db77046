#include "ebcast/graph.hpp"

#include "ebcast/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ebcast {

Graph::Graph(int vertex_count, std::span<const Edge> edges,
             std::vector<std::string> labels, Connectivity connectivity)
    : labels_(std::move(labels)) {
    if (vertex_count < 2) {
        throw InvalidParameter("graph needs at least 2 vertices, got " +
                               std::to_string(vertex_count));
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count) {
        throw InvalidInput("label count " + std::to_string(labels_.size()) +
                           " does not match vertex count " + std::to_string(vertex_count));
    }
    adjacency_.resize(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has an endpoint outside 0.." +
                               std::to_string(vertex_count - 1));
        }
        if (u == v) {
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto& list = adjacency_[v];
        std::sort(list.begin(), list.end());
        if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
            throw InvalidInput("duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                               std::to_string(std::max(v, *dup)) + ")");
        }
    }
    edge_count_ = static_cast<int>(edges.size());

    auto ids = component_ids(*this);
    connected_ = std::all_of(ids.begin(), ids.end(), [](int c) { return c == 0; });
    if (!connected_ && connectivity == Connectivity::require) {
        auto it = std::find_if(ids.begin(), ids.end(), [](int c) { return c != 0; });
        throw ConnectivityError("graph is disconnected: vertex " +
                                    std::to_string(it - ids.begin()) +
                                    " is unreachable from vertex 0",
                                0, static_cast<int>(it - ids.begin()));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Graph::min_degree() const noexcept {
    int best = vertex_count();
    for (const auto& list : adjacency_) best = std::min(best, static_cast<int>(list.size()));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::label(Vertex v) const {
    if (labels_.empty()) return std::to_string(v);
    return labels_.at(v);
}

std::vector<int> component_ids(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> ids(n, -1);
    int next = 0;
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (ids[s] != -1) continue;
        ids[s] = next;
        queue.push(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u)) {
                if (ids[w] == -1) {
                    ids[w] = next;
                    queue.push(w);
                }
            }
        }
        ++next;
    }
    return ids;
}

Graph generate(Family family, int size) {
    const int minimum = family == Family::cycle ? 3 : 2;
    if (size < minimum) {
        throw InvalidParameter(std::string(to_string(family)) + " size must be >= " +
                               std::to_string(minimum) + ", got " + std::to_string(size));
    }
    std::vector<Edge> edges;
    switch (family) {
        case Family::path:
            for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::cycle:
            for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, size - 1);
            break;
        case Family::complete:
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) edges.emplace_back(i, j);
            break;
        case Family::star:
            for (int i = 1; i < size; ++i) edges.emplace_back(0, i);
            break;
    }
    return Graph(size, edges);
}

Graph subdivided_star(int subdivisions, int n) {
    if (n < 3) {
        throw InvalidParameter("subdivided star needs n >= 3 (at least two legs), got " +
                               std::to_string(n));
    }
    if (subdivisions < 0) {
        throw InvalidParameter("subdivision count must be >= 0, got " +
                               std::to_string(subdivisions));
    }
    const int leg = subdivisions + 1;
    const int count = 1 + leg * (n - 1);
    std::vector<Edge> edges;
    for (int j = 0; j < n - 1; ++j) {
        Vertex previous = 0;
        for (int t = 1; t <= leg; ++t) {
            Vertex v = 1 + j * leg + (t - 1);
            edges.emplace_back(previous, v);
            previous = v;
        }
    }
    return Graph(count, edges);
}

Graph build_tk(int k) {
    if (k < 1) throw InvalidParameter("T_k needs k >= 1, got " + std::to_string(k));
    std::vector<Edge> edges{{0, 1}};
    std::vector<std::string> labels{"center:0", "center:1"};
    Vertex active[2] = {0, 1};
    Vertex next = 2;
    for (int step = 2; step <= k; ++step) {
        for (int side = 0; side < 2; ++side) {
            edges.emplace_back(active[side], next);
            edges.emplace_back(active[side], next + 1);
            labels.push_back("leaf:" + std::to_string(side) + ":" + std::to_string(step) + ":0");
            labels.push_back("leaf:" + std::to_string(side) + ":" + std::to_string(step) + ":1");
            active[side] = next;
            next += 2;
        }
    }
    return Graph(next, edges, std::move(labels));
}

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    const int gn = g.vertex_count();
    const int hn = h.vertex_count();
    auto id = [hn](Vertex i, Vertex j) { return i * hn + j; };

    std::vector<Edge> edges;
    for (Vertex a = 0; a < gn * hn; ++a) {
        const Vertex u = a / hn;
        const Vertex v = a % hn;
        for (Vertex b = a + 1; b < gn * hn; ++b) {
            const Vertex u2 = b / hn;
            const Vertex v2 = b % hn;
            const bool g_adj = u != u2 && g.adjacent(u, u2);
            const bool h_adj = v != v2 && h.adjacent(v, v2);
            bool joined = false;
            switch (kind) {
                case ProductKind::lexicographic:
                    joined = g_adj || (u == u2 && h_adj);
                    break;
                case ProductKind::strong:
                    joined = (u == u2 && h_adj) || (v == v2 && g_adj) || (g_adj && h_adj);
                    break;
                case ProductKind::cartesian:
                    joined = (u == u2 && h_adj) || (v == v2 && g_adj);
                    break;
            }
            if (joined) edges.emplace_back(id(u, v), id(u2, v2));
        }
    }
    std::vector<std::string> labels;
    labels.reserve(gn * hn);
    for (Vertex u = 0; u < gn; ++u)
        for (Vertex v = 0; v < hn; ++v)
            labels.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
    const auto connectivity = g.connected() && h.connected() ? Connectivity::require
                                                             : Connectivity::allow_disconnected;
    return Graph(gn * hn, edges, std::move(labels), connectivity);
}

const char* to_string(Family family) noexcept {
    switch (family) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
    }
    return "?";
}

const char* to_string(ProductKind kind) noexcept {
    switch (kind) {
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::strong: return "strong";
        case ProductKind::cartesian: return "cartesian";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (auto f : {Family::path, Family::cycle, Family::complete, Family::star}) {
        if (name == to_string(f)) return f;
    }
    throw InvalidParameter("unknown family '" + name + "'");
}

ProductKind parse_product_kind(const std::string& name) {
    for (auto k : {ProductKind::lexicographic, ProductKind::strong, ProductKind::cartesian}) {
        if (name == to_string(k)) return k;
    }
    throw InvalidParameter("unknown product kind '" + name + "'");
}

}  // namespace ebcast
