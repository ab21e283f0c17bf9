#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <unordered_map>

#include "netph/centrality.hpp"
#include "netph/curvature.hpp"
#include "netph/generators.hpp"
#include "netph/weighting.hpp"

using namespace netph;
using Catch::Matchers::WithinAbs;

namespace {
Graph path4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }
} // namespace

TEST_CASE("curvature normalization on P4") {
    // F = {1, 0, 1}; padded affine map sends 0 -> 1/3 and 1 -> 2/3
    const Graph g = path4();
    const auto w = normalize_curvature(forman_ricci_all(g));
    REQUIRE(w.size() == 3);
    CHECK_THAT(w[0], WithinAbs(2.0 / 3.0, 1e-15));
    CHECK_THAT(w[1], WithinAbs(1.0 / 3.0, 1e-15));
    CHECK_THAT(w[2], WithinAbs(2.0 / 3.0, 1e-15));
}

TEST_CASE("all-equal scores map to one half") {
    SECTION("triangle curvature") {
        const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
        for (double x : normalize_curvature(forman_ricci_all(g)))
            CHECK_THAT(x, WithinAbs(0.5, 1e-15));
    }
    SECTION("triangle betweenness") {
        const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
        for (double x : normalize_centrality(edge_betweenness_all(g)))
            CHECK_THAT(x, WithinAbs(0.5, 1e-15));
    }
}

TEST_CASE("betweenness normalization on P4 is decreasing") {
    // ebc = {6, 8, 6}: the central edge gets the small weight
    const Graph g = path4();
    const auto w = normalize_centrality(edge_betweenness_all(g));
    CHECK_THAT(w[0], WithinAbs(0.75, 1e-12));
    CHECK_THAT(w[1], WithinAbs(0.25, 1e-12));
    CHECK_THAT(w[2], WithinAbs(0.75, 1e-12));
}

TEST_CASE("normalization rejects empty input") {
    CHECK_THROWS_AS(normalize_curvature(std::vector<long long>{}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_centrality(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("weights stay inside (0,1) and preserve score order") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_er(40, 0.15, seed);
        if (g.edge_count() == 0) continue;
        const auto f = forman_ricci_all(g);
        const auto w = normalize_curvature(f);
        for (std::size_t i = 0; i < w.size(); ++i) {
            CHECK(w[i] > 0.0);
            CHECK(w[i] < 1.0);
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (f[i] < f[j]) CHECK(w[i] < w[j]);
                if (f[i] == f[j]) CHECK(w[i] == w[j]);
            }
        }
    }
}

TEST_CASE("shifting every curvature leaves the edge ordering unchanged") {
    const Graph g = gen_er(30, 0.2, 42);
    auto f = forman_ricci_all(g);
    const auto w1 = normalize_curvature(f);
    for (long long& x : f) x += 17;
    const auto w2 = normalize_curvature(f);
    auto order = [](const std::vector<double>& w) {
        std::vector<std::size_t> idx(w.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
        return idx;
    };
    CHECK(order(w1) == order(w2));
    // and the values themselves agree: the affine map is shift-invariant
    for (std::size_t i = 0; i < w1.size(); ++i) CHECK_THAT(w1[i], WithinAbs(w2[i], 1e-12));
}

TEST_CASE("extension: vertices take min, higher simplices take max") {
    // triangle 0-1-2 with pendant (0,3): weights
    // (0,1)=0.6 (0,2)=0.6 (1,2)=0.8 (0,3)=0.2
    const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    const auto ew = normalize_curvature(forman_ricci_all(g));
    REQUIRE(ew.size() == 4);
    CHECK_THAT(ew[g.edge_index(0, 1)], WithinAbs(0.6, 1e-12));
    CHECK_THAT(ew[g.edge_index(1, 2)], WithinAbs(0.8, 1e-12));
    CHECK_THAT(ew[g.edge_index(0, 3)], WithinAbs(0.2, 1e-12));

    const auto simplices = enumerate_cliques(g);
    const auto w = extend_weights(simplices, g, ew);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const Simplex& s = simplices[i];
        if (s == Simplex::vertex(0)) CHECK_THAT(w[i], WithinAbs(0.2, 1e-12));
        if (s == Simplex::vertex(1)) CHECK_THAT(w[i], WithinAbs(0.6, 1e-12));
        if (s == Simplex::vertex(2)) CHECK_THAT(w[i], WithinAbs(0.6, 1e-12));
        if (s == Simplex::vertex(3)) CHECK_THAT(w[i], WithinAbs(0.2, 1e-12));
        if (s == Simplex::triangle(0, 1, 2)) CHECK_THAT(w[i], WithinAbs(0.8, 1e-12));
    }
}

TEST_CASE("isolated vertices get the maximum weight present") {
    // edge (0,1) plus isolated vertex 2: the lone edge normalizes to 0.5
    const Graph g = Graph::from_edges(3, {{0, 1}});
    const auto ew = normalize_curvature(forman_ricci_all(g));
    const auto simplices = enumerate_cliques(g);
    const auto w = extend_weights(simplices, g, ew);
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (simplices[i] == Simplex::vertex(2)) CHECK_THAT(w[i], WithinAbs(0.5, 1e-15));
}

TEST_CASE("edgeless graphs weight every vertex 1.0") {
    const Graph g = Graph::from_edges(4, {});
    const auto simplices = enumerate_cliques(g);
    const auto w = extend_weights(simplices, g, {});
    REQUIRE(w.size() == 4);
    for (double x : w) CHECK(x == 1.0);
}

TEST_CASE("extension rejects a mismatched weight table") {
    const Graph g = path4();
    const auto simplices = enumerate_cliques(g);
    CHECK_THROWS_AS(extend_weights(simplices, g, std::vector<double>{0.5}), InvariantViolation);
}

TEST_CASE("simplex weights are monotone along the face relation") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = gen_er(25, 0.3, 77 + seed);
        if (g.edge_count() == 0) continue;
        const auto ew = normalize_curvature(forman_ricci_all(g));
        const auto simplices = enumerate_cliques(g);
        const auto w = extend_weights(simplices, g, ew);
        std::unordered_map<Simplex, double, SimplexHash> weight_of;
        for (std::size_t i = 0; i < simplices.size(); ++i) weight_of.emplace(simplices[i], w[i]);
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            const Simplex& s = simplices[i];
            for (int k = 0; k <= s.dim && s.dim > 0; ++k)
                CHECK(weight_of.at(s.face(k)) <= w[i]);
        }
    }
}
