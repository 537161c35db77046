// solver.hpp - exact k-ELDB search.
//
// A k-limited broadcast in which every vertex hears exactly one broadcaster
// is the same thing as a partition of V into closed balls of radius 1..k
// (a broadcaster hears itself, so chosen balls must be disjoint). All the
// objectives below are searches over such ball selections:
//
//   exists        some partition of V
//   min_cost      partition minimising the total radius          (gamma_ebk)
//   max_coverage  disjoint balls maximising the covered count    (F_k)
//   mcr           least k admitting a partition
//
// The brute-force oracle at the bottom ignores all of this and enumerates
// cost vectors through `classify`.
#pragma once

#include "ebcast/broadcast.hpp"
#include "ebcast/distance.hpp"
#include "ebcast/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ebcast {

enum class Objective { exists, min_cost, max_coverage, mcr, min_k_without_cost_one };

const char* to_string(Objective objective) noexcept;

struct SolveOptions {
    std::uint64_t node_limit = 50'000'000;
};

struct SolveResult {
    Objective objective = Objective::exists;
    bool feasible = false;
    /// gamma_ebk, F_k, the minimal k, or 1/0 for `exists`. Absent when an
    /// optimisation objective is infeasible or the search was exhausted.
    std::optional<long long> value;
    std::optional<Broadcast> witness;
    std::uint64_t nodes_explored = 0;
    /// The node limit was hit; `feasible == false` then means "unknown".
    bool exhausted = false;
};

/// Balls of radius 1..k (2..k when `forbid_cost_one`) in (center, radius)
/// order. A radius whose covered set equals that of a smaller listed radius
/// at the same center is dropped.
std::vector<Ball> enumerate_balls(const Graph& g, const DistanceMatrix& d, int k,
                                  bool forbid_cost_one = false);

// The next three accept disconnected graphs (unreachable vertices never hear).
SolveResult exists_k_eldb(const Graph& g, int k, const SolveOptions& options = {});
SolveResult gamma_ebk(const Graph& g, int k, const SolveOptions& options = {});
SolveResult f_k(const Graph& g, int k, const SolveOptions& options = {});

/// Least k in 1..rad(G) with a k-ELDB. Requires a connected graph.
SolveResult mcr(const Graph& g, const SolveOptions& options = {});

/// Least k >= 2 admitting a k-ELDB with no cost-1 broadcaster.
SolveResult min_k_without_cost_one(const Graph& g, const SolveOptions& options = {});

/// Existence test restricted to costs in 2..k.
SolveResult exists_k_eldb_without_cost_one(const Graph& g, int k,
                                           const SolveOptions& options = {});

/// Every k-ELDB of g (distinct cost vectors), in search order, stopping after
/// `max_solutions`. Unlike the objectives above, balls with equal covered sets
/// but different centers are kept apart, so symmetric witnesses all appear.
std::vector<Broadcast> enumerate_k_eldbs(const Graph& g, int k, std::size_t max_solutions = 1000);

struct OracleLimits {
    int max_vertices = 10;
    int max_k = 3;
};

/// Exhaustive check of all (k+1)^n cost vectors through `classify`.
/// Supports exists, min_cost and max_coverage; refuses (InvalidParameter)
/// instances beyond `limits`.
SolveResult brute_force_oracle(const Graph& g, int k, Objective objective,
                               const OracleLimits& limits = {});

}  // namespace ebcast
