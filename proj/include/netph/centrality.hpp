#pragma once

#include <cstdint>
#include <vector>

#include "netph/graph.hpp"

namespace netph {

// Shortest-path edge betweenness, summed over ordered vertex pairs:
//   ebc(e) = sum over (s,t), s != t, of sigma_st(e) / sigma_st
// with 0/0 = 0 for disconnected pairs. Brandes' dependency accumulation,
// one BFS per source; sources are processed in ascending vertex order and
// accumulate into a single per-edge array, so results are deterministic.
// halved=true divides everything by 2, giving the unordered-pair convention
// some tools report for undirected graphs.
inline std::vector<double> edge_betweenness_all(const Graph& g, bool halved = false) {
    const vertex_t n = g.vertex_count();
    std::vector<double> ebc(g.edges().size(), 0.0);

    std::vector<std::int32_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<vertex_t> order; // BFS visit order
    order.reserve(n);

    for (vertex_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            vertex_t v = order[head];
            for (vertex_t w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
            }
        }

        // Walk back from the frontier; each DAG edge (v,w) carries the
        // fraction of shortest paths from s through it.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            vertex_t w = *it;
            for (vertex_t v : g.neighbors(w)) {
                if (dist[v] != dist[w] - 1) continue;
                double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                ebc[g.edge_index(v, w)] += c;
                delta[v] += c;
            }
        }
    }

    if (halved)
        for (double& x : ebc) x /= 2.0;
    return ebc;
}

// Testing oracle: materializes every shortest path by expanding the BFS DAG
// level by level, then charges each path's edges 1/sigma_st per ordered pair.
// Deliberately independent of the accumulation above. Only for small graphs.
inline std::vector<double> ebc_brute_force(const Graph& g) {
    const vertex_t n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("ebc_brute_force: graph too large for oracle (n > 64)");
    std::vector<double> ebc(g.edges().size(), 0.0);

    for (vertex_t s = 0; s < n; ++s) {
        std::vector<std::int32_t> dist(n, -1);
        std::vector<vertex_t> order;
        dist[s] = 0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            vertex_t v = order[head];
            for (vertex_t w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
        }

        // paths[v] = all shortest s->v paths as explicit vertex sequences.
        std::vector<std::vector<std::vector<vertex_t>>> paths(n);
        paths[s] = {{s}};
        std::size_t total = 0;
        for (vertex_t v : order) {
            if (v == s) continue;
            for (vertex_t u : g.neighbors(v)) {
                if (dist[u] != dist[v] - 1) continue;
                for (const auto& p : paths[u]) {
                    paths[v].push_back(p);
                    paths[v].back().push_back(v);
                }
            }
            total += paths[v].size();
            if (total > 2'000'000)
                throw std::runtime_error("ebc_brute_force: path count blew up");
        }

        for (vertex_t t = 0; t < n; ++t) {
            if (t == s || paths[t].empty()) continue;
            const double share = 1.0 / static_cast<double>(paths[t].size());
            for (const auto& p : paths[t])
                for (std::size_t i = 0; i + 1 < p.size(); ++i)
                    ebc[g.edge_index(p[i], p[i + 1])] += share;
        }
    }
    return ebc;
}

} // namespace netph
