#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "netph/clique_complex.hpp"

namespace netph {

// Mod-2 boundary matrix in filtration order. columns[j] lists the positions
// of the codimension-1 faces of simplex j, ascending; vertices get empty
// columns. dims[j] mirrors the simplex dimension for the reducer.
struct BoundaryMatrix {
    std::vector<std::vector<index_t>> columns;
    std::vector<std::uint8_t> dims;
};

inline BoundaryMatrix boundary_matrix(const FilteredComplex& fc) {
    const std::size_t n = fc.simplices.size();
    std::unordered_map<Simplex, index_t, SimplexHash> position;
    position.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) position.emplace(fc.simplices[i], i);

    BoundaryMatrix bm;
    bm.columns.resize(n);
    bm.dims.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Simplex& s = fc.simplices[j];
        bm.dims[j] = s.dim;
        if (s.dim == 0) continue;
        auto& col = bm.columns[j];
        col.reserve(s.dim + 1);
        for (int k = 0; k <= s.dim; ++k) {
            auto it = position.find(s.face(k));
            if (it == position.end())
                throw InvariantViolation("boundary_matrix: face " + s.face(k).str() +
                                         " of " + s.str() + " is missing");
            col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
    }
    return bm;
}

// One finite homology class: born when simplex birth_index enters, killed by
// simplex death_index (dim(death) = dim+1).
struct PersistencePair {
    std::uint8_t dim;
    index_t birth_index;
    index_t death_index;
};

struct Reduction {
    std::vector<PersistencePair> pairs; // finite classes, ordered by death position
    std::vector<index_t> essential;     // birth positions of classes that never die, ascending
};

// Standard column reduction over Z/2 with the clearing optimization:
// dimensions are processed descending, and once (i, j) is paired the column
// of i is known to reduce to zero, so it is skipped entirely. Produces the
// same pairing as the unoptimized left-to-right reduction.
inline Reduction reduce(const BoundaryMatrix& bm) {
    const std::size_t n = bm.columns.size();
    std::vector<index_t> pivot_owner(n, -1); // row -> column that has it as low
    std::vector<char> cleared(n, 0);
    std::vector<std::vector<index_t>> reduced(n);
    Reduction result;

    std::uint8_t max_dim = 0;
    for (std::uint8_t d : bm.dims) max_dim = std::max(max_dim, d);

    std::vector<index_t> scratch;
    for (int d = max_dim; d >= 1; --d) {
        for (std::size_t j = 0; j < n; ++j) {
            if (bm.dims[j] != d || cleared[j]) continue;
            std::vector<index_t> col = bm.columns[j];
            while (!col.empty()) {
                const index_t low = col.back();
                const index_t owner = pivot_owner[low];
                if (owner < 0) break;
                // col ^= reduced[owner] (symmetric difference of sorted lists)
                scratch.clear();
                std::set_symmetric_difference(col.begin(), col.end(), reduced[owner].begin(),
                                              reduced[owner].end(), std::back_inserter(scratch));
                col.swap(scratch);
            }
            if (!col.empty()) {
                const index_t low = col.back();
                pivot_owner[low] = static_cast<index_t>(j);
                result.pairs.push_back({static_cast<std::uint8_t>(d - 1), low,
                                        static_cast<index_t>(j)});
                cleared[low] = 1;
                reduced[j] = std::move(col);
            }
        }
    }

    // Essential classes: simplices that neither die (appear as some pair's
    // birth) nor kill (reduce to a nonzero column).
    std::vector<char> paired(n, 0);
    for (const auto& p : result.pairs) {
        paired[p.birth_index] = 1;
        paired[p.death_index] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!paired[i]) result.essential.push_back(static_cast<index_t>(i));

    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const PersistencePair& a, const PersistencePair& b) {
                  return a.death_index < b.death_index;
              });
    return result;
}

// Rank of the map H_p(K_i) -> H_p(K_{i+j}) on filtration-position prefixes:
// the number of dim-p classes born at position < i that are still alive
// after i+j simplices (essential classes count as never dying). i = 0 is the
// empty complex; i = size() with j = 0 gives the Betti numbers of the full
// complex.
inline long long persistent_betti(const Reduction& red, const FilteredComplex& fc, index_t i,
                                  index_t j, int p) {
    if (i < 0 || j < 0 || i + j > fc.size())
        throw std::out_of_range("persistent_betti: stage out of range");
    const index_t upto = i + j;
    long long count = 0;
    for (const auto& pr : red.pairs)
        if (pr.dim == p && pr.birth_index < i && pr.death_index >= upto) ++count;
    for (index_t b : red.essential)
        if (fc.simplices[b].dim == p && b < i) ++count;
    return count;
}

// One bar of a barcode, in weight coordinates. Essential classes stretch to
// the end of the normalized axis and are flagged.
struct Bar {
    double birth;
    double death;
    bool essential;
    index_t birth_index;
    index_t death_index; // -1 for essential bars
};

struct BarcodeSet {
    std::array<std::vector<Bar>, 4> by_dim;

    const std::vector<Bar>& dim(int p) const { return by_dim.at(p); }
};

// Bars in weight coordinates per dimension. Zero-length bars (birth and
// death at the same weight) are retained; plotting layers may drop them.
inline BarcodeSet barcodes(const Reduction& red, const FilteredComplex& fc) {
    BarcodeSet bc;
    for (const auto& pr : red.pairs)
        bc.by_dim[pr.dim].push_back({fc.weights[pr.birth_index], fc.weights[pr.death_index],
                                     false, pr.birth_index, pr.death_index});
    for (index_t b : red.essential)
        bc.by_dim[fc.simplices[b].dim].push_back({fc.weights[b], 1.0, true, b, -1});
    for (auto& bars : bc.by_dim)
        std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
            if (a.birth != b.birth) return a.birth < b.birth;
            if (a.death != b.death) return a.death < b.death;
            return a.birth_index < b.birth_index;
        });
    return bc;
}

} // namespace netph
