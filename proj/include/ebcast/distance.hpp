// distance.hpp - all-pairs hop distances and the closed balls built on them.
#pragma once

#include "ebcast/graph.hpp"

#include <limits>
#include <vector>

namespace ebcast {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// All-pairs BFS distances with eccentricity, radius, diameter and center.
///
/// The derived views are only meaningful for connected graphs; for a matrix
/// built with `Connectivity::allow_disconnected` unreachable pairs hold
/// `kUnreachable` and so do every eccentricity, the radius and the diameter.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    int vertex_count() const noexcept { return n_; }
    int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    int eccentricity(Vertex v) const { return ecc_.at(v); }
    const std::vector<int>& eccentricities() const noexcept { return ecc_; }
    int radius() const noexcept { return radius_; }
    int diameter() const noexcept { return diameter_; }
    const std::vector<Vertex>& center() const noexcept { return center_; }

private:
    friend DistanceMatrix all_pairs_distances(const Graph&, Connectivity);

    int n_ = 0;
    std::vector<int> dist_;
    std::vector<int> ecc_;
    int radius_ = 0;
    int diameter_ = 0;
    std::vector<Vertex> center_;
};

/// BFS from every vertex. With `Connectivity::require` (the default) a
/// disconnected graph raises ConnectivityError naming an unreachable pair.
DistanceMatrix all_pairs_distances(const Graph& g,
                                   Connectivity connectivity = Connectivity::require);

/// Closed ball {u : d(u, center) <= radius}, covered ids ascending.
struct Ball {
    Vertex center = 0;
    int radius = 0;
    std::vector<Vertex> covered;

    friend bool operator==(const Ball&, const Ball&) = default;
};

Ball ball(const Graph& g, const DistanceMatrix& d, Vertex v, int radius);

}  // namespace ebcast
