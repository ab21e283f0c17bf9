#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "netph/persistence.hpp"

namespace netph {

// One diagram point (birth, death) with its multiplicity. Essential classes
// are capped at death 1.0 and flagged; they are points like any other for
// distance purposes.
struct DiagramPoint {
    double birth;
    double death;
    std::int64_t multiplicity;
    bool essential;

    friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

struct PersistenceDiagram {
    std::vector<DiagramPoint> points; // sorted by (birth, death, essential)

    std::int64_t total_multiplicity() const {
        std::int64_t m = 0;
        for (const auto& p : points) m += p.multiplicity;
        return m;
    }
};

// Aggregates reduction pairs of dimension p into diagram points; p = -1
// merges dimensions 0..3 into the total diagram.
inline PersistenceDiagram diagram_from_pairs(const Reduction& red, const FilteredComplex& fc,
                                             int p = -1) {
    std::map<std::pair<std::pair<double, double>, bool>, std::int64_t> acc;
    for (const auto& pr : red.pairs)
        if (p < 0 || pr.dim == p)
            ++acc[{{fc.weights[pr.birth_index], fc.weights[pr.death_index]}, false}];
    for (index_t b : red.essential)
        if (p < 0 || fc.simplices[b].dim == p) ++acc[{{fc.weights[b], 1.0}, true}];

    PersistenceDiagram d;
    d.points.reserve(acc.size());
    for (const auto& [key, mult] : acc)
        d.points.push_back({key.first.first, key.first.second, mult, key.second});
    return d;
}

// Multiplicity of the candidate point (wi, wj), wi < wj, recovered from
// persistent Betti numbers alone via the alternating four-corner sum around
// the point. Used as a cross-check oracle for diagram_from_pairs; essential
// classes never contribute.
inline long long multiplicity_oracle(const Reduction& red, const FilteredComplex& fc, int p,
                                     double wi, double wj) {
    if (!(wi < wj)) throw std::invalid_argument("multiplicity_oracle: needs wi < wj");
    const index_t ui = fc.prefix_at(wi), li = fc.prefix_below(wi);
    const index_t uj = fc.prefix_at(wj), lj = fc.prefix_below(wj);
    auto beta = [&](index_t x, index_t y) { // classes with birth pos < x, death pos >= y
        return persistent_betti(red, fc, x, y - x, p);
    };
    return beta(ui, lj) - beta(ui, uj) + beta(li, uj) - beta(li, lj);
}

namespace detail {

// Feasibility core for the bottleneck search. Points are expanded to
// distinct coordinates with integer multiplicities; the diagonal absorbs or
// supplies any number of points at cost diag_gap/2. A matching at threshold
// t exists iff the points forced off the diagonal on either side can be
// saturated into the other diagram, which two max-flow runs check
// (saturating one side never blocks saturating the other; a combined
// matching always exists when both do).
struct FlowGraph {
    // Dinic over a tiny layered graph. Node 0 = source, 1 = sink.
    struct Arc {
        int to;
        std::int64_t cap;
        std::size_t rev;
    };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, iter;

    explicit FlowGraph(int nodes) : adj(nodes) {}

    void add(int a, int b, std::int64_t cap) {
        adj[a].push_back({b, cap, adj[b].size()});
        adj[b].push_back({a, 0, adj[a].size() - 1});
    }

    bool bfs() {
        level.assign(adj.size(), -1);
        std::vector<int> q{0};
        level[0] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (const Arc& a : adj[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push_back(a.to);
                }
        }
        return level[1] >= 0;
    }

    std::int64_t dfs(int v, std::int64_t limit) {
        if (v == 1) return limit;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Arc& a = adj[v][i];
            if (a.cap <= 0 || level[a.to] != level[v] + 1) continue;
            std::int64_t got = dfs(a.to, std::min(limit, a.cap));
            if (got > 0) {
                a.cap -= got;
                adj[a.to][a.rev].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::int64_t max_flow() {
        std::int64_t flow = 0;
        while (bfs()) {
            iter.assign(adj.size(), 0);
            while (std::int64_t f = dfs(0, INT64_MAX)) flow += f;
        }
        return flow;
    }
};

struct BottleneckPoint {
    double b, d;
    std::int64_t mult;
    double to_diagonal() const { return (d - b) / 2.0; }
};

inline double linf(const BottleneckPoint& x, const BottleneckPoint& y) {
    return std::max(std::abs(x.b - y.b), std::abs(x.d - y.d));
}

// Can every point forced off the diagonal at threshold t be matched? "from"
// is the side whose forced points must saturate into "to" (capacities =
// multiplicities, edges where the L-inf distance is within t).
inline bool side_feasible(const std::vector<BottleneckPoint>& from,
                          const std::vector<BottleneckPoint>& to, double t) {
    std::vector<const BottleneckPoint*> forced;
    std::int64_t need = 0;
    for (const auto& p : from)
        if (p.to_diagonal() > t) {
            forced.push_back(&p);
            need += p.mult;
        }
    if (forced.empty()) return true;

    FlowGraph fg(2 + static_cast<int>(forced.size()) + static_cast<int>(to.size()));
    for (std::size_t i = 0; i < forced.size(); ++i) fg.add(0, 2 + static_cast<int>(i), forced[i]->mult);
    const int to_base = 2 + static_cast<int>(forced.size());
    for (std::size_t j = 0; j < to.size(); ++j) fg.add(to_base + static_cast<int>(j), 1, to[j].mult);
    for (std::size_t i = 0; i < forced.size(); ++i)
        for (std::size_t j = 0; j < to.size(); ++j)
            if (linf(*forced[i], to[j]) <= t)
                fg.add(2 + static_cast<int>(i), to_base + static_cast<int>(j), need);
    return fg.max_flow() == need;
}

inline bool feasible(const std::vector<BottleneckPoint>& xs,
                     const std::vector<BottleneckPoint>& ys, double t) {
    return side_feasible(xs, ys, t) && side_feasible(ys, xs, t);
}

} // namespace detail

// Bottleneck distance between two diagrams: the smallest threshold t for
// which the points of X and Y can be matched (using the diagonal, of
// infinite multiplicity, as needed) with every matched pair within
// L-infinity distance t. Exact: the optimum is one of the finitely many
// pairwise or point-to-diagonal distances, so a binary search over that
// candidate set with a matching feasibility test lands on it.
inline double bottleneck(const PersistenceDiagram& X, const PersistenceDiagram& Y) {
    std::vector<detail::BottleneckPoint> xs, ys;
    for (const auto& p : X.points)
        if (p.death > p.birth) xs.push_back({p.birth, p.death, p.multiplicity});
    for (const auto& p : Y.points)
        if (p.death > p.birth) ys.push_back({p.birth, p.death, p.multiplicity});
    if (xs.empty() && ys.empty()) return 0.0;

    // Matching everything to the diagonal is always possible, which caps the
    // answer; only candidates at or below the cap matter.
    double cap = 0.0;
    for (const auto& p : xs) cap = std::max(cap, p.to_diagonal());
    for (const auto& p : ys) cap = std::max(cap, p.to_diagonal());

    std::vector<double> cand;
    cand.reserve(xs.size() * ys.size() + xs.size() + ys.size() + 1);
    cand.push_back(0.0);
    for (const auto& p : xs)
        if (p.to_diagonal() <= cap) cand.push_back(p.to_diagonal());
    for (const auto& p : ys)
        if (p.to_diagonal() <= cap) cand.push_back(p.to_diagonal());
    for (const auto& x : xs)
        for (const auto& y : ys) {
            const double d = detail::linf(x, y);
            if (d <= cap) cand.push_back(d);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::size_t lo = 0, hi = cand.size() - 1; // cand[hi] = cap, always feasible
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (detail::feasible(xs, ys, cand[mid])) hi = mid;
        else lo = mid + 1;
    }
    return cand[lo];
}

// Mean and standard error of a set of pairwise distances.
struct DistanceSummary {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::size_t n_pairs = 0;
};

inline DistanceSummary summarize_distances(const std::vector<double>& d) {
    DistanceSummary s;
    s.n_pairs = d.size();
    if (d.empty()) return s;
    double sum = 0.0;
    for (double x : d) sum += x;
    s.mean = sum / static_cast<double>(d.size());
    if (d.size() > 1) {
        double ss = 0.0;
        for (double x : d) ss += (x - s.mean) * (x - s.mean);
        const double sample_sd = std::sqrt(ss / static_cast<double>(d.size() - 1));
        s.stderr_of_mean = sample_sd / std::sqrt(static_cast<double>(d.size()));
    }
    return s;
}

} // namespace netph
