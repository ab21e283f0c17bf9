#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "netph/errors.hpp"
#include "netph/graph.hpp"
#include "netph/rng.hpp"

namespace netph {

enum class ModelFamily { ER, WS, BA, Hyperbolic, Spherical };

inline const char* family_name(ModelFamily f) {
    switch (f) {
        case ModelFamily::ER: return "er";
        case ModelFamily::WS: return "ws";
        case ModelFamily::BA: return "ba";
        case ModelFamily::Hyperbolic: return "hyperbolic";
        case ModelFamily::Spherical: return "spherical";
    }
    return "?";
}

// Erdos-Renyi G(n,p): each of the C(n,2) vertex pairs is an edge
// independently with probability p. One draw per pair, in lexicographic
// order, so a seed pins the graph.
inline Graph gen_er(vertex_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_er: p outside [0,1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

// Watts-Strogatz: ring lattice where each vertex reaches its k/2 nearest
// neighbors on each side, then every edge's far endpoint is rewired with
// probability p to a uniform vertex, skipping self-loops and duplicates
// (the edge is kept in place when no valid target turns up). Edge count is
// exactly n*k/2 throughout.
inline Graph gen_ws(vertex_t n, int k, double p, std::uint64_t seed) {
    if (k <= 0 || k % 2 != 0 || static_cast<vertex_t>(k) >= n)
        throw std::invalid_argument("gen_ws: k must be even, positive and < n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_ws: p outside [0,1]");

    std::vector<std::set<vertex_t>> adj(n);
    auto has = [&](vertex_t a, vertex_t b) { return adj[a].count(b) > 0; };
    auto link = [&](vertex_t a, vertex_t b) { adj[a].insert(b); adj[b].insert(a); };
    auto unlink = [&](vertex_t a, vertex_t b) { adj[a].erase(b); adj[b].erase(a); };

    for (int d = 1; d <= k / 2; ++d)
        for (vertex_t u = 0; u < n; ++u) link(u, (u + d) % n);

    SplitMix64 rng(seed);
    for (int d = 1; d <= k / 2; ++d) {
        for (vertex_t u = 0; u < n; ++u) {
            const vertex_t old = (u + d) % n;
            if (rng.next_double() >= p) continue;
            if (adj[u].size() >= static_cast<std::size_t>(n) - 1) continue; // u already sees everyone
            for (int attempt = 0; attempt < 1 << 16; ++attempt) {
                const auto w = static_cast<vertex_t>(rng.next_below(n));
                if (w == u || has(u, w)) continue;
                unlink(u, old);
                link(u, w);
                break;
            }
        }
    }

    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v : adj[u])
            if (u < v) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

// Barabasi-Albert preferential attachment: seeded with a complete graph on m
// vertices, every later vertex attaches to m distinct existing vertices
// drawn proportionally to degree (uniformly when all degrees are still zero,
// which only happens for m = 1). |E| = C(m,2) + m*(n-m).
inline Graph gen_ba(vertex_t n, int m, std::uint64_t seed) {
    if (m <= 0 || static_cast<vertex_t>(m) >= n)
        throw std::invalid_argument("gen_ba: need 0 < m < n");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::vector<vertex_t> repeated; // one entry per unit of degree

    for (vertex_t u = 0; u < static_cast<vertex_t>(m); ++u)
        for (vertex_t v = u + 1; v < static_cast<vertex_t>(m); ++v) {
            edges.push_back({u, v});
            repeated.push_back(u);
            repeated.push_back(v);
        }

    std::vector<vertex_t> chosen;
    for (vertex_t v = static_cast<vertex_t>(m); v < n; ++v) {
        chosen.clear();
        while (chosen.size() < static_cast<std::size_t>(m)) {
            vertex_t target;
            if (repeated.empty()) target = static_cast<vertex_t>(rng.next_below(v));
            else target = repeated[rng.next_below(repeated.size())];
            if (std::find(chosen.begin(), chosen.end(), target) == chosen.end())
                chosen.push_back(target);
        }
        for (vertex_t t : chosen) {
            edges.push_back({t, v});
            repeated.push_back(t);
            repeated.push_back(v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

namespace detail {

// Probability that two independent points of the T=0 hyperbolic disk model
// (radius R, radial density ~ sinh(alpha r)) lie within distance R, times
// n-1 = expected degree. Midpoint quadrature over radius cells with exact
// per-cell radial mass (CDF increments), so neither the hub region near the
// origin nor the decay band near the rim is undersampled.
inline double hyperbolic_expected_degree(vertex_t n, double alpha, double R, int grid = 0) {
    if (grid <= 0) grid = std::clamp(static_cast<int>(R * 40.0), 400, 2400);
    const double norm = std::cosh(alpha * R) - 1.0;
    std::vector<double> mass(grid), ch(grid), sh(grid);
    for (int i = 0; i < grid; ++i) {
        const double a = R * i / grid, b = R * (i + 1) / grid;
        mass[i] = (std::cosh(alpha * b) - std::cosh(alpha * a)) / norm;
        const double r = 0.5 * (a + b);
        ch[i] = std::cosh(r);
        sh[i] = std::sinh(r);
    }
    const double coshR = std::cosh(R);
    double acc = 0.0;
    for (int i = 0; i < grid; ++i) {
        double row = 0.0;
        for (int j = 0; j < grid; ++j) {
            // connect iff cos(dtheta) >= (cosh r1 cosh r2 - cosh R)/(sinh r1 sinh r2)
            const double denom = sh[i] * sh[j];
            double frac;
            if (denom == 0.0) frac = 1.0; // at the origin every point is within R
            else {
                const double c = (ch[i] * ch[j] - coshR) / denom;
                if (c <= -1.0) frac = 1.0;
                else if (c >= 1.0) frac = 0.0;
                else frac = std::acos(c) / std::numbers::pi;
            }
            row += frac * mass[j];
        }
        acc += row * mass[i];
    }
    return acc * (n - 1);
}

} // namespace detail

// Disk radius R for which the analytic expected degree of the hyperbolic
// model hits k_target. Expected degree decreases in R; plain bisection.
// Calibrations are memoized: sampling loops hit the same (n, k, gamma) over
// and over.
inline double calibrate_hyperbolic_radius(vertex_t n, double k_target, double gamma) {
    if (n < 2 || k_target <= 0.0) throw std::invalid_argument("calibrate_hyperbolic_radius: bad target");
    if (gamma <= 1.0) throw std::invalid_argument("calibrate_hyperbolic_radius: gamma must exceed 1");
    const double alpha = (gamma - 1.0) / 2.0;

    static std::map<std::tuple<vertex_t, double, double>, double> cache;
    static std::mutex cache_mutex;
    const std::tuple<vertex_t, double, double> key{n, k_target, gamma};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    double lo = 1e-3, hi = 1.0;
    while (detail::hyperbolic_expected_degree(n, alpha, hi) > k_target) {
        hi *= 2.0;
        if (hi > 200.0) throw CalibrationError("hyperbolic radius search: no upper bracket");
    }
    if (detail::hyperbolic_expected_degree(n, alpha, lo) < k_target)
        throw CalibrationError("hyperbolic radius search: target degree unreachable (too dense)");

    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (detail::hyperbolic_expected_degree(n, alpha, mid) > k_target) lo = mid;
        else hi = mid;
    }
    const double R = 0.5 * (lo + hi);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, R);
    return R;
}

// Hyperbolic random geometric graph at zero temperature: n points in the
// hyperbolic disk of radius R, angle uniform, radius with density
// ~ sinh(alpha r), alpha = (gamma-1)/2; vertices within hyperbolic distance
// R are joined. R comes from calibrate_hyperbolic_radius so the expected
// degree matches k_target. k_target >= n-1 degenerates to the complete
// graph (the coupled threshold cannot reach densities beyond ~0.59, so the
// complete limit is taken directly).
inline Graph gen_hyperbolic(vertex_t n, double k_target, double gamma, std::uint64_t seed) {
    if (n == 0) return Graph::from_edges(0, {});
    if (k_target >= static_cast<double>(n) - 1.0) {
        std::vector<Edge> edges;
        for (vertex_t u = 0; u < n; ++u)
            for (vertex_t v = u + 1; v < n; ++v) edges.push_back({u, v});
        return Graph::from_edges(n, std::move(edges));
    }

    const double alpha = (gamma - 1.0) / 2.0;
    const double R = calibrate_hyperbolic_radius(n, k_target, gamma);
    const double scale = std::cosh(alpha * R) - 1.0;

    SplitMix64 rng(seed);
    std::vector<double> theta(n), ch(n), sh(n);
    for (vertex_t i = 0; i < n; ++i) {
        theta[i] = 2.0 * std::numbers::pi * rng.next_double();
        const double r = std::acosh(1.0 + rng.next_double() * scale) / alpha;
        ch[i] = std::cosh(r);
        sh[i] = std::sinh(r);
    }

    const double coshR = std::cosh(R);
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v) {
            const double ca = ch[u] * ch[v] - sh[u] * sh[v] * std::cos(theta[u] - theta[v]);
            if (ca <= coshR) edges.push_back({u, v});
        }
    return Graph::from_edges(n, std::move(edges));
}

// Uniform points on the unit 2-sphere joined when their angular distance is
// at most theta, with theta = arccos(1 - 2*k_target/(n-1)) so the expected
// degree is exactly k_target (the spherical cap of angle theta covers a
// (1-cos theta)/2 fraction of the sphere).
inline Graph gen_spherical(vertex_t n, double k_target, std::uint64_t seed) {
    if (n == 0) return Graph::from_edges(0, {});
    if (n == 1) return Graph::from_edges(1, {});
    if (k_target < 0.0) throw std::invalid_argument("gen_spherical: negative target degree");
    const double cos_theta = 1.0 - 2.0 * std::min(k_target, static_cast<double>(n - 1)) /
                                       static_cast<double>(n - 1);

    SplitMix64 rng(seed);
    std::vector<std::array<double, 3>> pts(n);
    for (vertex_t i = 0; i < n; ++i) {
        const double z = 2.0 * rng.next_double() - 1.0;
        const double phi = 2.0 * std::numbers::pi * rng.next_double();
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        pts[i] = {s * std::cos(phi), s * std::sin(phi), z};
    }

    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v) {
            const double dot = pts[u][0] * pts[v][0] + pts[u][1] * pts[v][1] + pts[u][2] * pts[v][2];
            if (dot >= cos_theta) edges.push_back({u, v});
        }
    return Graph::from_edges(n, std::move(edges));
}

// Parameter bundle for a generator, so experiments can be specified as data.
struct ModelSpec {
    ModelFamily family = ModelFamily::ER;
    vertex_t n = 0;
    double p = 0.0;      // ER, WS
    int k = 0;           // WS lattice degree
    int m = 0;           // BA attachments per vertex
    double gamma = 2.0;  // Hyperbolic
    double k_target = 0; // Hyperbolic, Spherical
    std::uint64_t seed = 0;
};

inline Graph generate(const ModelSpec& s) {
    switch (s.family) {
        case ModelFamily::ER: return gen_er(s.n, s.p, s.seed);
        case ModelFamily::WS: return gen_ws(s.n, s.k, s.p, s.seed);
        case ModelFamily::BA: return gen_ba(s.n, s.m, s.seed);
        case ModelFamily::Hyperbolic: return gen_hyperbolic(s.n, s.k_target, s.gamma, s.seed);
        case ModelFamily::Spherical: return gen_spherical(s.n, s.k_target, s.seed);
    }
    throw std::invalid_argument("generate: unknown model family");
}

// The standard five-model line-up at a shared size and mean degree:
// er (p = degree/n), ws (k = degree, p = 0.5), ba (m = degree/2),
// spherical and hyperbolic (gamma = 2) at k_target = degree.
inline std::vector<ModelSpec> standard_models(vertex_t n, double degree, std::uint64_t seed) {
    std::vector<ModelSpec> out;
    ModelSpec er;  er.family = ModelFamily::ER;         er.n = n; er.p = degree / n; er.seed = seed;
    ModelSpec ws;  ws.family = ModelFamily::WS;         ws.n = n; ws.k = static_cast<int>(degree); ws.p = 0.5; ws.seed = seed;
    ModelSpec ba;  ba.family = ModelFamily::BA;         ba.n = n; ba.m = std::max(1, static_cast<int>(degree / 2)); ba.seed = seed;
    ModelSpec sph; sph.family = ModelFamily::Spherical; sph.n = n; sph.k_target = degree; sph.seed = seed;
    ModelSpec hyp; hyp.family = ModelFamily::Hyperbolic; hyp.n = n; hyp.k_target = degree; hyp.gamma = 2.0; hyp.seed = seed;
    out.push_back(er); out.push_back(ws); out.push_back(ba); out.push_back(sph); out.push_back(hyp);
    return out;
}

} // namespace netph
