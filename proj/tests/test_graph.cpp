#include "ebcast/distance.hpp"
#include "ebcast/errors.hpp"
#include "ebcast/graph.hpp"
#include "ebcast/graph_io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace ebcast;

TEST_CASE("family generators have the canonical edge sets") {
    const Graph p5 = generate(Family::path, 5);
    CHECK(p5.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(generate(Family::cycle, 3).edge_count() == 3);
    CHECK(generate(Family::complete, 4).edge_count() == 6);
    const Graph star = generate(Family::star, 5);
    CHECK(star.edge_count() == 4);
    CHECK(star.degree(0) == 4);
    for (int n = 3; n <= 12; ++n) {
        const Graph c = generate(Family::cycle, n);
        CHECK(c.edge_count() == n);
        CHECK(c.adjacent(0, n - 1));
    }
}

TEST_CASE("generators reject sizes below the family minimum") {
    CHECK_THROWS_AS(generate(Family::path, 1), InvalidParameter);
    CHECK_THROWS_AS(generate(Family::cycle, 2), InvalidParameter);
    CHECK_THROWS_AS(generate(Family::complete, 1), InvalidParameter);
    CHECK_THROWS_AS(generate(Family::star, 0), InvalidParameter);
}

TEST_CASE("graph construction validates edges") {
    const std::vector<Edge> loop{{0, 0}, {0, 1}};
    CHECK_THROWS_AS(Graph(2, loop), InvalidInput);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(2, dup), InvalidInput);
    const std::vector<Edge> range{{0, 2}};
    CHECK_THROWS_AS(Graph(2, range), InvalidInput);
    const std::vector<Edge> none{};
    CHECK_THROWS_AS(Graph(1, none), InvalidParameter);
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS(Graph(4, split));
    const Graph loose(4, split, {}, Connectivity::allow_disconnected);
    CHECK_FALSE(loose.connected());
    CHECK(component_ids(loose) == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("subdivided stars") {
    CHECK(subdivided_star(0, 4) == generate(Family::star, 4));
    const Graph s13 = subdivided_star(1, 3);
    CHECK(s13.vertex_count() == 5);
    CHECK(s13.max_degree() == 2);
    const Graph s24 = subdivided_star(2, 4);
    CHECK(s24.vertex_count() == 10);
    const auto d = all_pairs_distances(s24);
    for (int leg = 0; leg < 3; ++leg) CHECK(d(0, (leg + 1) * 3) == 3);
    CHECK(d.eccentricity(0) == 3);
    CHECK_THROWS_AS(subdivided_star(1, 2), InvalidParameter);
    CHECK_THROWS_AS(subdivided_star(-1, 4), InvalidParameter);
}

TEST_CASE("T_k is a bicentral tree on 4k-2 vertices") {
    CHECK(build_tk(1) == generate(Family::path, 2));
    for (int k = 1; k <= 7; ++k) {
        const Graph t = build_tk(k);
        CHECK(t.vertex_count() == 4 * k - 2);
        CHECK(t.edge_count() == t.vertex_count() - 1);
        const auto d = all_pairs_distances(t);
        CHECK(d.center() == std::vector<Vertex>{0, 1});
        CHECK(d.radius() == k);
        if (k >= 2) CHECK(d.diameter() == 2 * k - 1);
        CHECK(t.label(0) == "center:0");
    }
    CHECK_THROWS_AS(build_tk(0), InvalidParameter);
}

TEST_CASE("product sizes and labels") {
    const Graph c7 = generate(Family::cycle, 7);
    const Graph p3 = generate(Family::path, 3);
    CHECK(product(ProductKind::strong, c7, p3).vertex_count() == 21);
    CHECK(product(ProductKind::strong, c7, p3).edge_count() == 7 * 3 + 7 * 2 + 2 * 7 * 2);
    CHECK(product(ProductKind::cartesian, c7, p3).edge_count() == 7 * 3 + 7 * 2);
    CHECK(product(ProductKind::lexicographic, c7, p3).edge_count() == 7 * 2 + 7 * 9);
    const Graph k2p3 = product(ProductKind::strong, generate(Family::path, 2), p3);
    CHECK(k2p3.label(product_vertex(p3, 1, 2)) == "(1,2)");
}

TEST_CASE("strong product distance is the max of factor distances") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testsupport::random_connected_graph(rng, 2 + trial % 4, 0.3);
        const Graph h = testsupport::random_connected_graph(rng, 2 + trial % 3, 0.3);
        const auto dg = all_pairs_distances(g);
        const auto dh = all_pairs_distances(h);
        for (auto kind : {ProductKind::strong, ProductKind::cartesian}) {
            const auto dp = all_pairs_distances(product(kind, g, h));
            for (int a = 0; a < g.vertex_count(); ++a)
                for (int b = 0; b < h.vertex_count(); ++b)
                    for (int c = 0; c < g.vertex_count(); ++c)
                        for (int e = 0; e < h.vertex_count(); ++e) {
                            const int got = dp(product_vertex(h, a, b), product_vertex(h, c, e));
                            if (kind == ProductKind::strong) {
                                CHECK(got == std::max(dg(a, c), dh(b, e)));
                            } else {
                                CHECK(got == dg(a, c) + dh(b, e));
                            }
                        }
        }
    }
}

TEST_CASE("lexicographic adjacency rule") {
    const Graph g = generate(Family::path, 3);
    const Graph h = generate(Family::path, 3);
    const Graph p = product(ProductKind::lexicographic, g, h);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int e = 0; e < 3; ++e) {
                    const bool expect = g.adjacent(a, c) || (a == c && h.adjacent(b, e));
                    CHECK(p.adjacent(product_vertex(h, a, b), product_vertex(h, c, e)) == expect);
                }
}

TEST_CASE("graph text format round trip") {
    const Graph t = build_tk(3);
    const std::string text = serialize_graph(t);
    CHECK(parse_graph(text) == t);
    CHECK(serialize_graph(parse_graph(text)) == text);
    CHECK(serialize_graph(generate(Family::path, 3)) == "3 2\n0 1\n1 2\n");
    CHECK(parse_graph("# comment\n\n3 2\n1 0\n2 1\n") == generate(Family::path, 3));

    const Graph labelled = attach_labels(generate(Family::path, 2), R"({"0":"a","1":"b"})");
    CHECK(labelled.label(1) == "b");
    CHECK(serialize_labels(attach_labels(t, serialize_labels(t))) == serialize_labels(t));
}

TEST_CASE("graph parse errors carry kind and line") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return std::pair{e.kind(), e.line()};
        }
        FAIL("no error");
        return std::pair{ParseError::Kind::malformed, std::size_t{0}};
    };
    CHECK(kind_of("3 2\n0 1\n1 1\n") == std::pair{ParseError::Kind::self_loop, std::size_t{3}});
    CHECK(kind_of("3 2\n0 1\n1 0\n") == std::pair{ParseError::Kind::duplicate_edge, std::size_t{3}});
    CHECK(kind_of("3 2\n0 1\n1 5\n") == std::pair{ParseError::Kind::out_of_range, std::size_t{3}});
    CHECK(kind_of("3 2\n0 1\n").first == ParseError::Kind::edge_count);
    CHECK(kind_of("4 2\n0 1\n2 3\n") == std::pair{ParseError::Kind::disconnected, std::size_t{1}});
    CHECK(kind_of("3 two\n").first == ParseError::Kind::malformed);
    CHECK(kind_of("1 0\n").first == ParseError::Kind::too_small);
}
