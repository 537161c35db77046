#include "ebcast/broadcast.hpp"

#include "ebcast/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace ebcast {

Broadcast::Broadcast(std::vector<int> costs, int cap) : costs_(std::move(costs)), cap_(cap) {
    if (cap_ < 0) throw InvalidParameter("broadcast cap must be >= 0");
    for (std::size_t v = 0; v < costs_.size(); ++v) {
        if (costs_[v] < 0 || costs_[v] > cap_) {
            throw InvalidInput("cost " + std::to_string(costs_[v]) + " at vertex " +
                               std::to_string(v) + " outside 0.." + std::to_string(cap_));
        }
    }
}

Broadcast Broadcast::zero(int vertex_count, int cap) {
    return Broadcast(std::vector<int>(vertex_count, 0), cap);
}

std::vector<Vertex> Broadcast::broadcasters() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v) {
        if (costs_[v] >= 1) out.push_back(v);
    }
    return out;
}

long long Broadcast::cost() const noexcept {
    return std::accumulate(costs_.begin(), costs_.end(), 0LL);
}

HearingReport classify(const Graph& g, const DistanceMatrix& d, const Broadcast& f) {
    const int n = g.vertex_count();
    if (f.size() != n || d.vertex_count() != n) {
        throw InvalidInput("broadcast has " + std::to_string(f.size()) +
                           " entries for a graph on " + std::to_string(n) + " vertices");
    }
    HearingReport report;
    report.hearers.resize(n);
    report.cost = f.cost();
    const auto broadcasters = f.broadcasters();

    std::vector<bool> over(n, false);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : broadcasters) {
            const int dist = d(u, v);
            if (dist <= f[v]) report.hearers[u].push_back(v);
            if (dist < f[v]) over[u] = true;
        }
    }
    for (Vertex v : broadcasters) {
        if (f[v] > d.eccentricity(v)) report.exceeds_eccentricity.push_back(v);
    }
    for (Vertex u = 0; u < n; ++u) {
        if (over[u]) report.overdominated.push_back(u);
    }

    const auto& h = report.hearers;
    report.coverage_count = static_cast<int>(
        std::count_if(h.begin(), h.end(), [](const auto& list) { return !list.empty(); }));
    report.is_dominating = report.coverage_count == n;
    report.is_efficient =
        std::all_of(h.begin(), h.end(), [](const auto& list) { return list.size() <= 1; });
    report.is_k_eldb =
        std::all_of(h.begin(), h.end(), [](const auto& list) { return list.size() == 1; });
    return report;
}

std::variant<long long, PackingViolation> influence(const Graph& g, std::span<const Vertex> set) {
    std::vector<Vertex> members(set.begin(), set.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Vertex v : members) {
        if (v < 0 || v >= g.vertex_count()) {
            throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
        }
    }

    // owner[x] = the member whose closed neighborhood already claimed x.
    std::vector<Vertex> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Vertex v = members[i];
        auto claim = [&](Vertex x) -> std::optional<PackingViolation> {
            if (owner[x] != -1) return PackingViolation{owner[x], v};
            owner[x] = v;
            return std::nullopt;
        };
        if (auto bad = claim(v)) return *bad;
        for (Vertex w : g.neighbors(v)) {
            if (auto bad = claim(w)) return *bad;
        }
    }
    long long total = 0;
    for (Vertex v : members) total += 1 + g.degree(v);
    return total;
}

}  // namespace ebcast
