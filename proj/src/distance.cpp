#include "ebcast/distance.hpp"

#include "ebcast/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace ebcast {

DistanceMatrix all_pairs_distances(const Graph& g, Connectivity connectivity) {
    const int n = g.vertex_count();
    DistanceMatrix d;
    d.n_ = n;
    d.dist_.assign(static_cast<std::size_t>(n) * n, kUnreachable);

    std::queue<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        int* row = d.dist_.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue.push(w);
                }
            }
        }
        if (connectivity == Connectivity::require) {
            auto it = std::find(row, row + n, kUnreachable);
            if (it != row + n) {
                const int t = static_cast<int>(it - row);
                throw ConnectivityError("no path between vertices " + std::to_string(s) +
                                            " and " + std::to_string(t),
                                        s, t);
            }
        }
    }

    d.ecc_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        const int* row = d.dist_.data() + static_cast<std::size_t>(v) * n;
        d.ecc_[v] = *std::max_element(row, row + n);
    }
    d.radius_ = *std::min_element(d.ecc_.begin(), d.ecc_.end());
    d.diameter_ = *std::max_element(d.ecc_.begin(), d.ecc_.end());
    for (Vertex v = 0; v < n; ++v) {
        if (d.ecc_[v] == d.radius_) d.center_.push_back(v);
    }
    return d;
}

Ball ball(const Graph& g, const DistanceMatrix& d, Vertex v, int radius) {
    if (v < 0 || v >= g.vertex_count()) {
        throw InvalidParameter("ball center " + std::to_string(v) + " out of range");
    }
    if (radius < 0) throw InvalidParameter("ball radius must be >= 0");
    Ball b{v, radius, {}};
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (d(u, v) <= radius) b.covered.push_back(u);
    }
    return b;
}

}  // namespace ebcast
