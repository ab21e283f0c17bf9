#pragma once

#include <vector>

#include "netph/graph.hpp"

namespace netph {

// Number of triangles the edge (u,v) participates in = |N(u) cap N(v)|.
inline index_t triangles_on_edge(const Graph& g, vertex_t u, vertex_t v) {
    if (!g.has_edge(u, v))
        throw InvariantViolation("triangles_on_edge: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") is not an edge");
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    index_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

// Discrete curvature of an edge in a graph with unit vertex, edge and
// triangle weights. Evaluated term by term: one +1 per triangle containing
// the edge, +1 per endpoint, and -1 per parallel edge at either endpoint
// that spans no triangle with it. Always an integer; equals
// 4 - deg(u) - deg(v) + 3 * triangles_on_edge(u,v).
inline long long forman_ricci(const Graph& g, vertex_t u, vertex_t v) {
    long long f = 0;
    f += triangles_on_edge(g, u, v); // also validates the edge
    f += 2;                          // the two endpoints
    for (vertex_t x : g.neighbors(u))
        if (x != v && !g.has_edge(x, v)) f -= 1;
    for (vertex_t x : g.neighbors(v))
        if (x != u && !g.has_edge(x, u)) f -= 1;
    return f;
}

// Curvature of every edge, aligned with g.edges().
inline std::vector<long long> forman_ricci_all(const Graph& g) {
    std::vector<long long> out;
    out.reserve(g.edges().size());
    for (const Edge& e : g.edges()) out.push_back(forman_ricci(g, e.u, e.v));
    return out;
}

} // namespace netph
