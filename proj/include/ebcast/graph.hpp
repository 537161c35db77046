// graph.hpp - immutable simple undirected graphs, the standard families,
// the T_k gadget tree and the three graph products.
#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ebcast {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class Connectivity { require, allow_disconnected };

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Construction validates the edge list: no self-loops, no duplicate edges,
/// every id in range, n >= 2. Connectivity is checked unless the caller opts
/// out explicitly (only the reduction gadget does; a formula may leave a
/// variable unused, which isolates its tree).
class Graph {
public:
    Graph(int vertex_count, std::span<const Edge> edges,
          std::vector<std::string> labels = {},
          Connectivity connectivity = Connectivity::require);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    int max_degree() const noexcept;
    int min_degree() const noexcept;
    bool connected() const noexcept { return connected_; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// The provenance label of v, or its decimal id when the graph is unlabeled.
    std::string label(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
    bool connected_ = false;
};

/// Component id per vertex (components numbered in order of their lowest vertex).
std::vector<int> component_ids(const Graph& g);

enum class Family { path, cycle, complete, star };

/// Canonical family member: path 0-1-...-(n-1), cycle edges (i, i+1 mod n),
/// complete graph, star K_{1,n-1} centered at 0.
Graph generate(Family family, int size);

/// i-th subdivision of K_{1,n-1}: n-1 paths v0 v1 ... v_{i+1} sharing v0 = 0.
/// Leg j (0-based) occupies ids 1 + j(i+1) .. (j+1)(i+1), ordered outward.
Graph subdivided_star(int subdivisions, int n);

/// Recursive bicentral tree T_k with 4k-2 vertices. Vertices 0 and 1 are the
/// centers (the original K_2). Each step hangs a fresh P_3, by its middle
/// vertex, on both active endpoints; the lower new id becomes the next active
/// endpoint on that side.
Graph build_tk(int k);

enum class ProductKind { lexicographic, strong, cartesian };

/// Product of g and h; pair (i, j) maps to id i * |V(h)| + j and carries the
/// label "(i,j)".
Graph product(ProductKind kind, const Graph& g, const Graph& h);

inline Vertex product_vertex(const Graph& h, Vertex i, Vertex j) {
    return i * h.vertex_count() + j;
}

const char* to_string(Family family) noexcept;
const char* to_string(ProductKind kind) noexcept;
Family parse_family(const std::string& name);
ProductKind parse_product_kind(const std::string& name);

}  // namespace ebcast
