#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "netph/errors.hpp"

namespace netph {

using vertex_t = std::uint32_t;
using index_t = std::int64_t;

// Undirected edge, stored with u < v.
struct Edge {
    vertex_t u = 0, v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Simple undirected graph over dense vertex ids 0..n-1. Adjacency is CSR
// with sorted neighbor lists; the edge list is kept lexicographically sorted
// so edge_index() can binary-search it.
class Graph {
  public:
    Graph() = default;

    // Normalizes input: orients u < v, drops self-loops, collapses duplicates.
    // Endpoints must be < n. original_ids maps dense id -> external id and
    // defaults to the identity.
    static Graph from_edges(vertex_t n, std::vector<Edge> edges,
                            std::vector<std::int64_t> original_ids = {}) {
        Graph g;
        g.n_ = n;
        for (auto& e : edges) {
            if (e.u >= n || e.v >= n)
                throw InvariantViolation("edge endpoint out of range: " + std::to_string(e.u) +
                                         " " + std::to_string(e.v));
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        g.edges_ = std::move(edges);

        if (original_ids.empty()) {
            g.original_ids_.resize(n);
            for (vertex_t v = 0; v < n; ++v) g.original_ids_[v] = v;
        } else {
            if (original_ids.size() != n)
                throw InvariantViolation("original id table size does not match vertex count");
            g.original_ids_ = std::move(original_ids);
        }

        std::vector<index_t> deg(n, 0);
        for (const Edge& e : g.edges_) {
            ++deg[e.u];
            ++deg[e.v];
        }
        g.adj_off_.assign(n + 1, 0);
        for (vertex_t v = 0; v < n; ++v) g.adj_off_[v + 1] = g.adj_off_[v] + deg[v];
        g.adj_flat_.resize(g.adj_off_[n]);
        std::vector<index_t> cursor(g.adj_off_.begin(), g.adj_off_.end() - 1);
        for (const Edge& e : g.edges_) {
            g.adj_flat_[cursor[e.u]++] = e.v;
            g.adj_flat_[cursor[e.v]++] = e.u;
        }
        for (vertex_t v = 0; v < n; ++v)
            std::sort(g.adj_flat_.begin() + g.adj_off_[v], g.adj_flat_.begin() + g.adj_off_[v + 1]);
        return g;
    }

    vertex_t vertex_count() const { return n_; }
    index_t edge_count() const { return static_cast<index_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::int64_t>& original_ids() const { return original_ids_; }

    std::span<const vertex_t> neighbors(vertex_t v) const {
        check_vertex(v);
        return {adj_flat_.data() + adj_off_[v], adj_flat_.data() + adj_off_[v + 1]};
    }

    vertex_t degree(vertex_t v) const {
        check_vertex(v);
        return static_cast<vertex_t>(adj_off_[v + 1] - adj_off_[v]);
    }

    bool has_edge(vertex_t u, vertex_t v) const {
        if (u == v) return false;
        auto nb = neighbors(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Position of (u,v) in edges(), or -1 when absent.
    index_t edge_index(vertex_t u, vertex_t v) const {
        if (u > v) std::swap(u, v);
        Edge probe{u, v};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
        if (it == edges_.end() || !(*it == probe)) return -1;
        return it - edges_.begin();
    }

  private:
    void check_vertex(vertex_t v) const {
        if (v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(n_) + ")");
    }

    vertex_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<vertex_t> adj_flat_;
    std::vector<index_t> adj_off_;
    std::vector<std::int64_t> original_ids_;
};

struct Components {
    std::size_t count = 0;
    std::vector<std::uint32_t> labels; // per vertex, 0-based in discovery order of roots
};

inline Components connected_components(const Graph& g) {
    const vertex_t n = g.vertex_count();
    Components c;
    c.labels.assign(n, UINT32_MAX);
    std::vector<vertex_t> queue;
    for (vertex_t root = 0; root < n; ++root) {
        if (c.labels[root] != UINT32_MAX) continue;
        const auto label = static_cast<std::uint32_t>(c.count++);
        c.labels[root] = label;
        queue.assign(1, root);
        while (!queue.empty()) {
            vertex_t v = queue.back();
            queue.pop_back();
            for (vertex_t w : g.neighbors(v)) {
                if (c.labels[w] == UINT32_MAX) {
                    c.labels[w] = label;
                    queue.push_back(w);
                }
            }
        }
    }
    return c;
}

// Edge-list reader. Lines hold two whitespace-separated non-negative integer
// ids; '#' and '%' start comment lines; blank lines are skipped. An optional
// first-line header "n=<count>" (or the keep_isolated_hint argument) switches
// to literal-id mode: ids are taken as final vertex indices and trailing ids
// that appear in no edge survive as isolated vertices. Without a hint, ids are
// densified in order of first appearance and isolated vertices cannot be
// expressed.
inline Graph load_edge_list(std::istream& in, std::optional<vertex_t> keep_isolated_hint = {}) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<vertex_t> hint = keep_isolated_hint;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    bool first_content_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;

        if (first_content_line && line_no == 1 && line.compare(start, 2, "n=") == 0) {
            std::size_t pos = 0;
            const std::string value = line.substr(start + 2);
            unsigned long count = 0;
            try {
                count = std::stoul(value, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad vertex count header", line_no);
            }
            if (pos != value.size() && value.find_first_not_of(" \t\r", pos) != std::string::npos)
                throw ParseError("bad vertex count header", line_no);
            hint = hint ? std::max(*hint, static_cast<vertex_t>(count))
                        : static_cast<vertex_t>(count);
            first_content_line = false;
            continue;
        }
        first_content_line = false;

        std::istringstream ls(line);
        std::int64_t a, b;
        if (!(ls >> a >> b)) throw ParseError("expected two integer vertex ids", line_no);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        if (a < 0 || b < 0) throw ParseError("negative vertex id", line_no);
        raw.emplace_back(a, b);
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());

    if (hint) {
        std::int64_t max_id = -1;
        for (auto [a, b] : raw) max_id = std::max({max_id, a, b});
        const auto n = static_cast<vertex_t>(std::max<std::int64_t>(*hint, max_id + 1));
        for (auto [a, b] : raw)
            edges.push_back({static_cast<vertex_t>(a), static_cast<vertex_t>(b)});
        return Graph::from_edges(n, std::move(edges));
    }

    std::unordered_map<std::int64_t, vertex_t> dense;
    std::vector<std::int64_t> original;
    auto intern = [&](std::int64_t id) {
        auto [it, inserted] = dense.try_emplace(id, static_cast<vertex_t>(original.size()));
        if (inserted) original.push_back(id);
        return it->second;
    };
    for (auto [a, b] : raw) {
        vertex_t u = intern(a);
        vertex_t v = intern(b);
        edges.push_back({u, v});
    }
    const auto n = static_cast<vertex_t>(original.size());
    return Graph::from_edges(n, std::move(edges), std::move(original));
}

// Canonical serialization: vertex count header + lex-sorted dense edges.
// Reading this back yields the same graph with identical ids.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n=" << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

} // namespace netph
