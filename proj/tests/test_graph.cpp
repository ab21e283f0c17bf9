#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "netph/generators.hpp"
#include "netph/graph.hpp"

using namespace netph;

TEST_CASE("edge list: triangle with comments and duplicates") {
    std::istringstream in(
        "# a triangle, noisily encoded\n"
        "0 1\n"
        "1 0\n"
        "% percent comments too\n"
        "1 2\n"
        "2 2\n"
        "0 2\n");
    const Graph g = load_edge_list(in);
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 3); // self-loop dropped, duplicate collapsed
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(2, 2));
}

TEST_CASE("edge list: ids densified in first-appearance order") {
    std::istringstream in("7 3\n3 12\n");
    const Graph g = load_edge_list(in);
    REQUIRE(g.vertex_count() == 3);
    CHECK(g.original_ids() == std::vector<std::int64_t>{7, 3, 12});
    CHECK(g.has_edge(0, 1)); // 7-3
    CHECK(g.has_edge(1, 2)); // 3-12
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list: vertex count header retains isolated vertices") {
    std::istringstream in("n=5\n1 2\n");
    const Graph g = load_edge_list(in);
    REQUIRE(g.vertex_count() == 5);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.degree(0) == 0);
    CHECK(g.degree(3) == 0);
    CHECK(g.degree(4) == 0);
    CHECK(g.has_edge(1, 2)); // literal ids in header mode
}

TEST_CASE("edge list: hint argument behaves like the header") {
    std::istringstream in("0 2\n");
    const Graph g = load_edge_list(in, 4);
    REQUIRE(g.vertex_count() == 4);
    CHECK(g.degree(1) == 0);
    CHECK(g.degree(3) == 0);
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("edge list: malformed input reports the line") {
    SECTION("non-integer token") {
        std::istringstream in("0 1\nx 2\n");
        try {
            load_edge_list(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SECTION("wrong arity") {
        std::istringstream in("0 1 2\n");
        CHECK_THROWS_AS(load_edge_list(in), ParseError);
    }
    SECTION("lone token") {
        std::istringstream in("5\n");
        CHECK_THROWS_AS(load_edge_list(in), ParseError);
    }
    SECTION("negative id") {
        std::istringstream in("0 -1\n");
        CHECK_THROWS_AS(load_edge_list(in), ParseError);
    }
}

TEST_CASE("edge list: empty input is the empty graph") {
    std::istringstream in("");
    const Graph g = load_edge_list(in);
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(connected_components(g).count == 0);
}

TEST_CASE("degree: star hub versus leaves") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 1);
    CHECK_THROWS_AS(g.degree(4), std::out_of_range);
}

TEST_CASE("connected components: two triangles and an isolated vertex") {
    const Graph g =
        Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const Components c = connected_components(g);
    REQUIRE(c.count == 3);
    CHECK(c.labels[0] == c.labels[1]);
    CHECK(c.labels[0] == c.labels[2]);
    CHECK(c.labels[3] == c.labels[4]);
    CHECK(c.labels[3] != c.labels[0]);
    CHECK(c.labels[6] != c.labels[0]);
    CHECK(c.labels[6] != c.labels[3]);
}

TEST_CASE("serialization round-trips with identical ids") {
    // random graphs with isolated vertices mixed in
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_er(30, 0.08, seed);
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        const Graph h = load_edge_list(in);
        REQUIRE(h.vertex_count() == g.vertex_count());
        REQUIRE(h.edges() == g.edges());
        std::ostringstream out2;
        write_edge_list(out2, h);
        CHECK(out2.str() == out.str());
    }
}

TEST_CASE("adjacency is symmetric and loop-free") {
    const Graph g = gen_er(60, 0.1, 17);
    for (vertex_t v = 0; v < g.vertex_count(); ++v)
        for (vertex_t w : g.neighbors(v)) {
            CHECK(w != v);
            CHECK(g.has_edge(w, v));
        }
    // handshake
    std::size_t total = 0;
    for (vertex_t v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.edges().size());
}

TEST_CASE("edge_index maps every edge to its slot") {
    const Graph g = gen_er(40, 0.15, 3);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge e = g.edges()[i];
        CHECK(g.edge_index(e.u, e.v) == static_cast<index_t>(i));
        CHECK(g.edge_index(e.v, e.u) == static_cast<index_t>(i));
    }
    CHECK(g.edge_index(0, 0) == -1);
}
