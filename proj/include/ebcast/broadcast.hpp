// broadcast.hpp - broadcast cost functions and the hearing rule.
//
// Everything here is evaluated straight from the definitions (who hears
// whom) so it can serve as an independent check on solver output.
#pragma once

#include "ebcast/distance.hpp"
#include "ebcast/graph.hpp"

#include <span>
#include <variant>
#include <vector>

namespace ebcast {

/// Per-vertex non-negative costs f(v), each at most the limit k.
class Broadcast {
public:
    Broadcast(std::vector<int> costs, int cap);

    /// All-zero broadcast on n vertices.
    static Broadcast zero(int vertex_count, int cap);

    int size() const noexcept { return static_cast<int>(costs_.size()); }
    int cap() const noexcept { return cap_; }
    int operator[](Vertex v) const { return costs_.at(v); }
    const std::vector<int>& costs() const noexcept { return costs_; }

    /// V_f^+ in ascending order.
    std::vector<Vertex> broadcasters() const;
    /// Total cost, the sum of f(v).
    long long cost() const noexcept;

    friend bool operator==(const Broadcast&, const Broadcast&) = default;

private:
    std::vector<int> costs_;
    int cap_;
};

struct HearingReport {
    /// hearers[u] = H(u), the broadcasters v with d(u, v) <= f(v).
    std::vector<std::vector<Vertex>> hearers;
    int coverage_count = 0;
    bool is_dominating = false;
    bool is_efficient = false;
    bool is_k_eldb = false;
    long long cost = 0;
    /// Vertices u with some broadcaster v at d(u, v) < f(v).
    std::vector<Vertex> overdominated;
    /// Broadcasters whose cost exceeds their eccentricity (the ball saturates).
    std::vector<Vertex> exceeds_eccentricity;
};

/// Evaluates the hearing rule for f on g. Throws InvalidInput when f has the
/// wrong length.
HearingReport classify(const Graph& g, const DistanceMatrix& d, const Broadcast& f);

struct PackingViolation {
    Vertex first;
    Vertex second;
};

/// Influence sum(1 + deg v) of a 2-packing. Otherwise the first clash met
/// while claiming closed neighborhoods in ascending member order, reported
/// as (earlier member, later member).
std::variant<long long, PackingViolation> influence(const Graph& g, std::span<const Vertex> set);

}  // namespace ebcast
