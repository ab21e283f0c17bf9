#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netph/graph.hpp"

namespace netph {

// Simplex of dimension <= 3, vertices sorted ascending in the first dim+1
// slots. Kept as a flat value type so simplex tables stay contiguous.
struct Simplex {
    std::array<vertex_t, 4> v{};
    std::uint8_t dim = 0;

    static Simplex vertex(vertex_t a) { return {{a, 0, 0, 0}, 0}; }
    static Simplex edge(vertex_t a, vertex_t b) { return {{a, b, 0, 0}, 1}; }
    static Simplex triangle(vertex_t a, vertex_t b, vertex_t c) { return {{a, b, c, 0}, 2}; }
    static Simplex tetrahedron(vertex_t a, vertex_t b, vertex_t c, vertex_t d) {
        return {{a, b, c, d}, 3};
    }

    std::span<const vertex_t> vertices() const { return {v.data(), std::size_t(dim) + 1}; }

    // Codimension-1 face obtained by dropping vertex slot k. dim must be >= 1.
    Simplex face(int k) const {
        Simplex f;
        f.dim = dim - 1;
        int out = 0;
        for (int i = 0; i <= dim; ++i)
            if (i != k) f.v[out++] = v[i];
        return f;
    }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        if (a.dim != b.dim) return false;
        for (int i = 0; i <= a.dim; ++i)
            if (a.v[i] != b.v[i]) return false;
        return true;
    }

    // Order by dimension, then lexicographically by vertex tuple.
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (int i = 0; i <= a.dim; ++i)
            if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
        return false;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i <= dim; ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    }
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = s.dim;
        for (int i = 0; i <= s.dim; ++i) {
            h ^= s.v[i] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// All cliques of the graph with at most max_dim+1 vertices, as simplices:
// vertices, edges, triangles from sorted neighbor intersection, tetrahedra by
// extending each triangle with a later common neighbor. Ascending vertex
// tuples make each clique appear exactly once. Order: dimension, then lex.
inline std::vector<Simplex> enumerate_cliques(const Graph& g, int max_dim = 3) {
    if (max_dim < 0 || max_dim > 3)
        throw std::invalid_argument("enumerate_cliques: max_dim must be in [0,3]");
    std::vector<Simplex> out;
    const vertex_t n = g.vertex_count();
    for (vertex_t a = 0; a < n; ++a) out.push_back(Simplex::vertex(a));
    if (max_dim >= 1)
        for (const Edge& e : g.edges()) out.push_back(Simplex::edge(e.u, e.v));

    std::vector<Simplex> triangles;
    if (max_dim >= 2) {
        std::vector<vertex_t> common;
        for (const Edge& e : g.edges()) {
            common.clear();
            auto a = g.neighbors(e.u);
            auto b = g.neighbors(e.v);
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            for (vertex_t w : common)
                if (w > e.v) triangles.push_back(Simplex::triangle(e.u, e.v, w));
        }
        std::sort(triangles.begin(), triangles.end());
        out.insert(out.end(), triangles.begin(), triangles.end());
    }

    if (max_dim >= 3) {
        std::vector<Simplex> tets;
        std::vector<vertex_t> common, common3;
        for (const Simplex& t : triangles) {
            common.clear();
            common3.clear();
            auto a = g.neighbors(t.v[0]);
            auto b = g.neighbors(t.v[1]);
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            auto c = g.neighbors(t.v[2]);
            std::set_intersection(common.begin(), common.end(), c.begin(), c.end(),
                                  std::back_inserter(common3));
            for (vertex_t z : common3)
                if (z > t.v[2]) tets.push_back(Simplex::tetrahedron(t.v[0], t.v[1], t.v[2], z));
        }
        std::sort(tets.begin(), tets.end());
        out.insert(out.end(), tets.begin(), tets.end());
    }
    return out;
}

// A simplicial complex in filtration order. simplices[i] enters at weight
// weights[i]; weights are non-decreasing and every face precedes its cofaces.
// levels holds the distinct weights ascending; level_of[i] is the 1-based
// index of weights[i] in levels (the filtration stage the simplex enters at).
struct FilteredComplex {
    std::vector<Simplex> simplices;
    std::vector<double> weights;
    std::vector<double> levels;
    std::vector<index_t> level_of;

    index_t size() const { return static_cast<index_t>(simplices.size()); }

    // Number of simplices with weight <= w (a filtration position prefix).
    index_t prefix_at(double w) const {
        return std::upper_bound(weights.begin(), weights.end(), w) - weights.begin();
    }
    // Number of simplices with weight < w.
    index_t prefix_below(double w) const {
        return std::lower_bound(weights.begin(), weights.end(), w) - weights.begin();
    }
};

// Sorts (weight ascending, dimension ascending, vertex tuple ascending) and
// verifies weight monotonicity along the face relation. The tie-break makes
// the order total, so equal inputs produce identical filtrations.
inline FilteredComplex build_filtration(std::vector<Simplex> simplices,
                                        std::vector<double> weights) {
    if (simplices.size() != weights.size())
        throw InvariantViolation("build_filtration: weight table size mismatch");
    const std::size_t n = simplices.size();

    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (weights[a] != weights[b]) return weights[a] < weights[b];
        return simplices[a] < simplices[b];
    });

    FilteredComplex fc;
    fc.simplices.reserve(n);
    fc.weights.reserve(n);
    for (std::uint32_t i : perm) {
        fc.simplices.push_back(simplices[i]);
        fc.weights.push_back(weights[i]);
    }

    std::unordered_map<Simplex, index_t, SimplexHash> position;
    position.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) position.emplace(fc.simplices[i], i);

    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& s = fc.simplices[i];
        if (s.dim == 0) continue;
        for (int k = 0; k <= s.dim; ++k) {
            Simplex f = s.face(k);
            auto it = position.find(f);
            if (it == position.end())
                throw InvariantViolation("build_filtration: face " + f.str() + " of " + s.str() +
                                         " is missing");
            if (fc.weights[it->second] > fc.weights[i])
                throw InvariantViolation("build_filtration: face " + f.str() + " (weight " +
                                         std::to_string(fc.weights[it->second]) + ") is heavier than " +
                                         s.str() + " (weight " + std::to_string(fc.weights[i]) + ")");
        }
    }

    fc.level_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (fc.levels.empty() || fc.weights[i] > fc.levels.back()) fc.levels.push_back(fc.weights[i]);
        fc.level_of[i] = static_cast<index_t>(fc.levels.size());
    }
    return fc;
}

struct ValidationReport {
    bool ok = true;
    std::string message;
};

// Re-checks the filtration contract on an already-built complex: dimensions
// within cap, weights sorted, every codim-1 face present at an earlier (or
// equal-weight, lower-rank) position.
inline ValidationReport validate_complex(const FilteredComplex& fc) {
    auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
    const std::size_t n = fc.simplices.size();
    if (fc.weights.size() != n || fc.level_of.size() != n)
        return fail("table sizes disagree");
    std::unordered_map<Simplex, index_t, SimplexHash> position;
    position.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& s = fc.simplices[i];
        if (s.dim > 3) return fail("simplex " + s.str() + " exceeds the dimension cap");
        for (int k = 0; k < s.dim; ++k)
            if (s.v[k] >= s.v[k + 1]) return fail("simplex " + s.str() + " vertices not ascending");
        if (i > 0 && fc.weights[i] < fc.weights[i - 1])
            return fail("weights decrease at position " + std::to_string(i));
        for (int k = 0; k <= s.dim && s.dim > 0; ++k) {
            auto it = position.find(s.face(k));
            if (it == position.end())
                return fail("face " + s.face(k).str() + " of " + s.str() +
                            " absent or after its coface");
        }
        position.emplace(s, i);
    }
    return {};
}

} // namespace netph
