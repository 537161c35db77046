#include "ebcast/distance.hpp"
#include "ebcast/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace ebcast;

TEST_CASE("BFS distances agree with Floyd-Warshall") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 12;
        const Graph g = testsupport::random_connected_graph(rng, n, 0.15);
        const auto d = all_pairs_distances(g);
        const auto ref = testsupport::floyd_warshall(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) REQUIRE(d(u, v) == ref[u][v]);
    }
}

TEST_CASE("metric invariants on random graphs") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 10;
        const Graph g = testsupport::random_connected_graph(rng, n, 0.2);
        const auto d = all_pairs_distances(g);
        CHECK(d.radius() <= d.diameter());
        CHECK(d.diameter() <= 2 * d.radius());
        for (int u = 0; u < n; ++u) {
            CHECK(d(u, u) == 0);
            for (int v = 0; v < n; ++v) {
                CHECK(d(u, v) == d(v, u));
                for (int w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
            }
        }
        for (Vertex c : d.center()) CHECK(d.eccentricity(c) == d.radius());
    }
}

TEST_CASE("named metrics") {
    const auto c7 = all_pairs_distances(generate(Family::cycle, 7));
    CHECK(c7.radius() == 3);
    CHECK(c7.diameter() == 3);
    CHECK(c7.center().size() == 7);
    const auto p6 = all_pairs_distances(generate(Family::path, 6));
    CHECK(p6.radius() == 3);
    CHECK(p6.diameter() == 5);
    CHECK(p6.center() == std::vector<Vertex>{2, 3});
    const auto k4 = all_pairs_distances(generate(Family::complete, 4));
    CHECK(k4.radius() == 1);
}

TEST_CASE("disconnected graphs") {
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    const Graph g(4, split, {}, Connectivity::allow_disconnected);
    CHECK_THROWS_AS(all_pairs_distances(g), ConnectivityError);
    const auto d = all_pairs_distances(g, Connectivity::allow_disconnected);
    CHECK(d(0, 1) == 1);
    CHECK(d(0, 2) == kUnreachable);
}

TEST_CASE("closed balls") {
    const Graph p5 = generate(Family::path, 5);
    const auto d = all_pairs_distances(p5);
    CHECK(ball(p5, d, 2, 0).covered == std::vector<Vertex>{2});
    CHECK(ball(p5, d, 2, 1).covered == std::vector<Vertex>{1, 2, 3});
    CHECK(ball(p5, d, 0, 2).covered == std::vector<Vertex>{0, 1, 2});
    CHECK(ball(p5, d, 2, 9).covered.size() == 5);
    CHECK_THROWS(ball(p5, d, 2, -1));
}
