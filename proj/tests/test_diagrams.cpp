#include <catch2/catch_amalgamated.hpp>

#include "netph/curvature.hpp"
#include "netph/diagrams.hpp"
#include "netph/generators.hpp"
#include "netph/rng.hpp"
#include "netph/weighting.hpp"
#include "oracles.hpp"

using namespace netph;
using Catch::Matchers::WithinAbs;

namespace {

PersistenceDiagram diagram(std::vector<DiagramPoint> pts) { return {std::move(pts)}; }

struct Reduced {
    FilteredComplex fc;
    Reduction red;
};

Reduced reduce_graph(const Graph& g) {
    const auto simplices = enumerate_cliques(g);
    std::vector<double> ew;
    if (g.edge_count() > 0) ew = normalize_curvature(forman_ricci_all(g));
    FilteredComplex fc = build_filtration(simplices, extend_weights(simplices, g, ew));
    Reduction red = reduce(boundary_matrix(fc));
    return {std::move(fc), std::move(red)};
}

PersistenceDiagram random_diagram(SplitMix64& rng, int max_points) {
    std::vector<DiagramPoint> pts;
    const int k = static_cast<int>(rng.next_below(max_points + 1));
    for (int i = 0; i < k; ++i) {
        const double b = rng.next_double();
        const double d = b + rng.next_double() * (1.0 - b);
        pts.push_back({b, d, static_cast<std::int64_t>(1 + rng.next_below(2)), false});
    }
    return diagram(std::move(pts));
}

} // namespace

TEST_CASE("pairs aggregate into diagram points with multiplicity") {
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    const Reduced r = reduce_graph(g);

    const PersistenceDiagram d0 = diagram_from_pairs(r.red, r.fc, 0);
    REQUIRE(d0.points.size() == 2);
    CHECK(d0.points[0] == DiagramPoint{0.5, 0.5, 2, false});
    CHECK(d0.points[1] == DiagramPoint{0.5, 1.0, 1, true});

    const PersistenceDiagram d1 = diagram_from_pairs(r.red, r.fc, 1);
    REQUIRE(d1.points.size() == 1);
    CHECK(d1.points[0] == DiagramPoint{0.5, 0.5, 1, false});

    const PersistenceDiagram total = diagram_from_pairs(r.red, r.fc);
    CHECK(total.total_multiplicity() == 4);
    CHECK(diagram_from_pairs(r.red, r.fc, 2).points.empty());
    CHECK(diagram_from_pairs(r.red, r.fc, 3).points.empty());
}

TEST_CASE("diagram multiplicities match the rank-based count") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = gen_er(12, 0.3, 1000 + seed);
        const Reduced r = reduce_graph(g);
        for (int p = 0; p <= 3; ++p) {
            const PersistenceDiagram d = diagram_from_pairs(r.red, r.fc, p);
            for (const auto& pt : d.points) {
                if (pt.essential || pt.death <= pt.birth) continue;
                CHECK(multiplicity_oracle(r.red, r.fc, p, pt.birth, pt.death) ==
                      pt.multiplicity);
            }
            // every level pair not in the diagram must count zero
            for (std::size_t i = 0; i < r.fc.levels.size(); ++i)
                for (std::size_t j = i + 1; j < r.fc.levels.size(); ++j) {
                    const double wi = r.fc.levels[i], wj = r.fc.levels[j];
                    std::int64_t in_diagram = 0;
                    for (const auto& pt : d.points)
                        if (!pt.essential && pt.birth == wi && pt.death == wj)
                            in_diagram = pt.multiplicity;
                    CHECK(multiplicity_oracle(r.red, r.fc, p, wi, wj) == in_diagram);
                }
        }
    }
}

TEST_CASE("multiplicity oracle rejects degenerate corners") {
    const Reduced r = reduce_graph(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK_THROWS_AS(multiplicity_oracle(r.red, r.fc, 0, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("bottleneck on hand-checked diagrams") {
    const PersistenceDiagram empty = diagram({});
    CHECK(bottleneck(empty, empty) == 0.0);

    const PersistenceDiagram one = diagram({{1.0, 3.0, 1, false}});
    CHECK(bottleneck(one, one) == 0.0);
    CHECK_THAT(bottleneck(one, empty), WithinAbs(1.0, 1e-15));
    CHECK_THAT(bottleneck(empty, one), WithinAbs(1.0, 1e-15));

    // matching beats the diagonal when the shapes are close
    CHECK_THAT(bottleneck(diagram({{0.0, 1.0, 1, false}}),
                          diagram({{0.1, 1.05, 1, false}})),
               WithinAbs(0.1, 1e-15));

    // here both options tie at 2
    CHECK_THAT(bottleneck(diagram({{0.0, 2.0, 1, false}}),
                          diagram({{0.0, 4.0, 1, false}})),
               WithinAbs(2.0, 1e-15));

    // extra multiplicity must fall back to the diagonal
    CHECK_THAT(bottleneck(diagram({{1.0, 3.0, 2, false}}), one), WithinAbs(1.0, 1e-15));
    CHECK(bottleneck(diagram({{1.0, 3.0, 2, false}}), diagram({{1.0, 3.0, 2, false}})) == 0.0);

    // zero-persistence points are invisible
    CHECK(bottleneck(diagram({{1.0, 3.0, 1, false}, {2.0, 2.0, 5, false}}), one) == 0.0);
    CHECK(bottleneck(diagram({{0.7, 0.7, 3, false}}), empty) == 0.0);
}

TEST_CASE("bottleneck matches exhaustive matching on small diagrams") {
    SplitMix64 rng(0xD1A6'2026ULL);
    for (int trial = 0; trial < 300; ++trial) {
        const PersistenceDiagram X = random_diagram(rng, 4);
        const PersistenceDiagram Y = random_diagram(rng, 4);
        const double fast = bottleneck(X, Y);
        const double slow = oracles::bottleneck_exhaustive(X, Y);
        CHECK_THAT(fast, WithinAbs(slow, 1e-12));
    }
}

TEST_CASE("bottleneck is symmetric and satisfies the triangle inequality") {
    SplitMix64 rng(0xBEEF'0042ULL);
    for (int trial = 0; trial < 60; ++trial) {
        const PersistenceDiagram X = random_diagram(rng, 5);
        const PersistenceDiagram Y = random_diagram(rng, 5);
        const PersistenceDiagram Z = random_diagram(rng, 5);
        const double xy = bottleneck(X, Y), yx = bottleneck(Y, X);
        CHECK(xy == yx);
        CHECK(bottleneck(X, Z) <= xy + bottleneck(Y, Z) + 1e-12);
        CHECK(xy >= 0.0);
    }
}

TEST_CASE("bottleneck between real diagrams respects weight perturbation") {
    // shrinking every weight by a factor keeps the filtration order, so the
    // diagrams differ by at most the largest weight shift
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = gen_er(20, 0.2, 1100 + seed);
        if (g.edge_count() == 0) continue;
        const auto simplices = enumerate_cliques(g);
        const auto ew = normalize_curvature(forman_ricci_all(g));
        const auto w = extend_weights(simplices, g, ew);

        const double delta = 0.05;
        std::vector<double> shrunk = w;
        for (double& x : shrunk) x *= 1.0 - delta;

        FilteredComplex fa = build_filtration(simplices, w);
        FilteredComplex fb = build_filtration(simplices, shrunk);
        const Reduction ra = reduce(boundary_matrix(fa));
        const Reduction rb = reduce(boundary_matrix(fb));
        for (int p = -1; p <= 3; ++p) {
            const double d = bottleneck(diagram_from_pairs(ra, fa, p),
                                        diagram_from_pairs(rb, fb, p));
            CHECK(d <= delta + 1e-12);
        }
    }
}

TEST_CASE("distance summaries") {
    const DistanceSummary s = summarize_distances({1.0, 2.0, 3.0});
    CHECK(s.n_pairs == 3);
    CHECK_THAT(s.mean, WithinAbs(2.0, 1e-15));
    CHECK_THAT(s.stderr_of_mean, WithinAbs(1.0 / std::sqrt(3.0), 1e-15));

    const DistanceSummary single = summarize_distances({0.4});
    CHECK(single.n_pairs == 1);
    CHECK(single.mean == 0.4);
    CHECK(single.stderr_of_mean == 0.0);

    const DistanceSummary none = summarize_distances({});
    CHECK(none.n_pairs == 0);
    CHECK(none.mean == 0.0);
}
