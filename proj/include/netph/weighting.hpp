#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "netph/clique_complex.hpp"
#include "netph/graph.hpp"

namespace netph {

// Affine rescaling of integer edge curvatures onto (0,1), increasing:
//   w(e) = (F(e) - (F_min - eps)) / ((F_max + eps) - (F_min - eps))
// The eps padding keeps every weight strictly inside (0,1) even at the
// extremes. All-equal inputs map to 0.5.
inline std::vector<double> normalize_curvature(std::span<const long long> curvature,
                                               double epsilon = 1.0) {
    if (curvature.empty())
        throw std::invalid_argument("normalize_curvature: no edges");
    const auto [lo_it, hi_it] = std::minmax_element(curvature.begin(), curvature.end());
    const double lo = static_cast<double>(*lo_it), hi = static_cast<double>(*hi_it);
    const double span = (hi + epsilon) - (lo - epsilon);
    std::vector<double> w;
    w.reserve(curvature.size());
    for (long long f : curvature) w.push_back((static_cast<double>(f) - (lo - epsilon)) / span);
    return w;
}

// Rescaling of edge betweenness onto (0,1), decreasing (central edges get
// small weights and enter the filtration early):
//   w(e) = ((ebc_max + eps) - ebc(e)) / ((ebc_max + eps) - (ebc_min - eps))
// All-equal inputs map to 0.5.
inline std::vector<double> normalize_centrality(std::span<const double> centrality,
                                                double epsilon = 1.0) {
    if (centrality.empty())
        throw std::invalid_argument("normalize_centrality: no edges");
    const auto [lo_it, hi_it] = std::minmax_element(centrality.begin(), centrality.end());
    const double lo = *lo_it, hi = *hi_it;
    const double span = (hi + epsilon) - (lo - epsilon);
    std::vector<double> w;
    w.reserve(centrality.size());
    for (double c : centrality) w.push_back(((hi + epsilon) - c) / span);
    return w;
}

// Extends edge weights to every simplex: a vertex takes the minimum over its
// incident edges, a p-simplex (p >= 2) the maximum over its constituent
// edges. Isolated vertices take the maximum weight present anywhere in the
// complex so they enter at the last stage; in an edgeless graph every vertex
// gets weight 1.0. edge_weights is aligned with g.edges(). The returned
// table is aligned with simplices.
inline std::vector<double> extend_weights(std::span<const Simplex> simplices, const Graph& g,
                                          std::span<const double> edge_weights) {
    if (edge_weights.size() != g.edges().size())
        throw InvariantViolation("extend_weights: edge weight table does not match graph");

    std::vector<double> out(simplices.size());
    double max_present = 0.0;
    std::vector<std::size_t> isolated;

    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const Simplex& s = simplices[i];
        if (s.dim == 0) {
            const vertex_t a = s.v[0];
            if (g.degree(a) == 0) {
                isolated.push_back(i);
                continue;
            }
            double w = std::numeric_limits<double>::infinity();
            for (vertex_t b : g.neighbors(a)) {
                const index_t idx = g.edge_index(a, b);
                w = std::min(w, edge_weights[idx]);
            }
            out[i] = w;
        } else {
            double w = -std::numeric_limits<double>::infinity();
            auto vs = s.vertices();
            for (std::size_t p = 0; p < vs.size(); ++p)
                for (std::size_t q = p + 1; q < vs.size(); ++q) {
                    const index_t idx = g.edge_index(vs[p], vs[q]);
                    if (idx < 0)
                        throw InvariantViolation("extend_weights: " + s.str() +
                                                 " uses a missing edge");
                    w = std::max(w, edge_weights[idx]);
                }
            out[i] = w;
        }
        max_present = std::max(max_present, out[i]);
    }

    const double isolated_w = edge_weights.empty() ? 1.0 : max_present;
    for (std::size_t i : isolated) out[i] = isolated_w;
    return out;
}

} // namespace netph
