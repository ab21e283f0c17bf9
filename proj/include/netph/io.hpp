#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netph/clique_complex.hpp"
#include "netph/diagrams.hpp"
#include "netph/graph.hpp"
#include "netph/persistence.hpp"

namespace netph {

// Every float that crosses a file boundary is printed with 12 significant
// digits. Values are quantized through the same formatter before they enter
// the filtration, so re-running a stage from its serialized artifact sees
// exactly the doubles the full run saw and outputs stay byte-identical.
inline std::string format_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline double quantize_g12(double x) {
    return std::strtod(format_g12(x).c_str(), nullptr);
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline long long to_int(const std::string& tok, std::size_t line_no) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("bad integer '" + tok + "'", line_no);
    return v;
}

inline double to_double(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw ParseError("bad number '" + tok + "'", line_no);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad number '" + tok + "'", line_no);
    }
}

// Non-blank lines minus the expected header.
inline std::vector<std::pair<std::string, std::size_t>> body_lines(std::istream& in,
                                                                   const std::string& header) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            saw_header = true;
            if (line == header) continue;
            throw ParseError("expected header '" + header + "'", line_no);
        }
        out.emplace_back(line, line_no);
    }
    return out;
}

} // namespace detail

// --- edge scores (curvature / betweenness) ------------------------------

inline void write_curvature_csv(std::ostream& out, const Graph& g,
                                const std::vector<long long>& f) {
    out << "u,v,F\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        out << g.edges()[i].u << "," << g.edges()[i].v << "," << f[i] << "\n";
}

inline void write_centrality_csv(std::ostream& out, const Graph& g,
                                 const std::vector<double>& ebc) {
    out << "u,v,ebc\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        out << g.edges()[i].u << "," << g.edges()[i].v << "," << format_g12(ebc[i]) << "\n";
}

// Reads either score artifact back as per-edge doubles aligned with
// g.edges(). Fails if the file does not cover the graph's edges exactly.
inline std::vector<double> read_edge_scores_csv(std::istream& in, const Graph& g,
                                                const std::string& header) {
    std::vector<double> scores(g.edges().size());
    std::vector<char> seen(g.edges().size(), 0);
    for (const auto& [line, line_no] : detail::body_lines(in, header)) {
        auto tok = detail::split(line, ',');
        if (tok.size() != 3) throw ParseError("expected u,v,score", line_no);
        const long long u = detail::to_int(tok[0], line_no);
        const long long v = detail::to_int(tok[1], line_no);
        const index_t idx = g.edge_index(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
        if (idx < 0) throw ParseError("edge not in graph", line_no);
        scores[idx] = detail::to_double(tok[2], line_no);
        seen[idx] = 1;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw ParseError("missing score for edge " + std::to_string(g.edges()[i].u) +
                                       "," + std::to_string(g.edges()[i].v));
    return scores;
}

// --- simplex weights -----------------------------------------------------

inline void write_weights_csv(std::ostream& out, std::span<const Simplex> simplices,
                              std::span<const double> weights) {
    out << "simplex_vertices;dim;weight\n";
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const auto vs = simplices[i].vertices();
        for (std::size_t k = 0; k < vs.size(); ++k) out << (k ? "," : "") << vs[k];
        out << ";" << int(simplices[i].dim) << ";" << format_g12(weights[i]) << "\n";
    }
}

struct WeightedSimplices {
    std::vector<Simplex> simplices;
    std::vector<double> weights;
};

inline WeightedSimplices read_weights_csv(std::istream& in) {
    WeightedSimplices out;
    for (const auto& [line, line_no] : detail::body_lines(in, "simplex_vertices;dim;weight")) {
        auto tok = detail::split(line, ';');
        if (tok.size() != 3) throw ParseError("expected simplex_vertices;dim;weight", line_no);
        auto verts = detail::split(tok[0], ',');
        const long long dim = detail::to_int(tok[1], line_no);
        if (dim < 0 || dim > 3 || verts.size() != static_cast<std::size_t>(dim) + 1)
            throw ParseError("vertex count does not match dimension", line_no);
        Simplex s;
        s.dim = static_cast<std::uint8_t>(dim);
        for (std::size_t k = 0; k < verts.size(); ++k)
            s.v[k] = static_cast<vertex_t>(detail::to_int(verts[k], line_no));
        out.simplices.push_back(s);
        out.weights.push_back(detail::to_double(tok[2], line_no));
    }
    return out;
}

// --- filtration ----------------------------------------------------------

inline void write_filtration_csv(std::ostream& out, const FilteredComplex& fc) {
    out << "position,dim,vertices,weight\n";
    for (index_t i = 0; i < fc.size(); ++i) {
        const auto vs = fc.simplices[i].vertices();
        out << i << "," << int(fc.simplices[i].dim) << ",";
        for (std::size_t k = 0; k < vs.size(); ++k) out << (k ? " " : "") << vs[k];
        out << "," << format_g12(fc.weights[i]) << "\n";
    }
}

inline FilteredComplex read_filtration_csv(std::istream& in) {
    std::vector<Simplex> simplices;
    std::vector<double> weights;
    index_t expect = 0;
    for (const auto& [line, line_no] : detail::body_lines(in, "position,dim,vertices,weight")) {
        auto tok = detail::split(line, ',');
        if (tok.size() != 4) throw ParseError("expected position,dim,vertices,weight", line_no);
        if (detail::to_int(tok[0], line_no) != expect++)
            throw ParseError("positions must be consecutive from 0", line_no);
        const long long dim = detail::to_int(tok[1], line_no);
        std::istringstream vs(tok[2]);
        Simplex s;
        if (dim < 0 || dim > 3) throw ParseError("dimension out of range", line_no);
        s.dim = static_cast<std::uint8_t>(dim);
        long long v = 0;
        int k = 0;
        while (vs >> v) {
            if (k > dim) throw ParseError("too many vertices for dimension", line_no);
            s.v[k++] = static_cast<vertex_t>(v);
        }
        if (k != dim + 1) throw ParseError("too few vertices for dimension", line_no);
        simplices.push_back(s);
        weights.push_back(detail::to_double(tok[3], line_no));
    }
    return build_filtration(std::move(simplices), std::move(weights));
}

// --- barcode / pairs / diagrams -----------------------------------------

inline void write_barcode_csv(std::ostream& out, const BarcodeSet& bc) {
    out << "dim,birth,death,essential\n";
    for (int p = 0; p < 4; ++p)
        for (const Bar& b : bc.by_dim[p])
            out << p << "," << format_g12(b.birth) << "," << format_g12(b.death) << ","
                << (b.essential ? 1 : 0) << "\n";
}

inline BarcodeSet read_barcode_csv(std::istream& in) {
    BarcodeSet bc;
    for (const auto& [line, line_no] : detail::body_lines(in, "dim,birth,death,essential")) {
        auto tok = detail::split(line, ',');
        if (tok.size() != 4) throw ParseError("expected dim,birth,death,essential", line_no);
        const long long p = detail::to_int(tok[0], line_no);
        if (p < 0 || p > 3) throw ParseError("dimension out of range", line_no);
        Bar b{detail::to_double(tok[1], line_no), detail::to_double(tok[2], line_no),
              detail::to_int(tok[3], line_no) != 0, -1, -1};
        bc.by_dim[p].push_back(b);
    }
    return bc;
}

inline void write_pairs_json(std::ostream& out, const Reduction& red, const FilteredComplex& fc) {
    nlohmann::json j;
    j["levels"] = nlohmann::json::array();
    for (double w : fc.levels) j["levels"].push_back(quantize_g12(w));
    auto& pairs = j["pairs"] = nlohmann::json::array();
    for (const auto& pr : red.pairs)
        pairs.push_back({{"dim", pr.dim},
                         {"birth_index", pr.birth_index},
                         {"death_index", pr.death_index},
                         {"birth", quantize_g12(fc.weights[pr.birth_index])},
                         {"death", quantize_g12(fc.weights[pr.death_index])},
                         {"essential", false}});
    for (index_t b : red.essential)
        pairs.push_back({{"dim", fc.simplices[b].dim},
                         {"birth_index", b},
                         {"death_index", nullptr},
                         {"birth", quantize_g12(fc.weights[b])},
                         {"death", 1.0},
                         {"essential", true}});
    out << j.dump(2) << "\n";
}

// Diagram JSON: {"0": [[birth, death, multiplicity, essential], ...], ...,
// "total": [...]} with one key per dimension plus the union.
inline void write_diagram_json(std::ostream& out, const Reduction& red,
                               const FilteredComplex& fc) {
    nlohmann::json j;
    auto fill = [&](const char* key, int p) {
        auto arr = nlohmann::json::array();
        for (const auto& pt : diagram_from_pairs(red, fc, p).points)
            arr.push_back({quantize_g12(pt.birth), quantize_g12(pt.death), pt.multiplicity,
                           pt.essential});
        j[key] = std::move(arr);
    };
    for (int p = 0; p < 4; ++p) fill(std::to_string(p).c_str(), p);
    fill("total", -1);
    out << j.dump(2) << "\n";
}

inline PersistenceDiagram read_diagram_json(std::istream& in, const std::string& key = "total") {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.contains(key)) throw ParseError("diagram JSON lacks key '" + key + "'");
    PersistenceDiagram d;
    for (const auto& row : j.at(key)) {
        if (!row.is_array() || row.size() != 4)
            throw ParseError("diagram rows must be [birth, death, multiplicity, essential]");
        d.points.push_back({row[0].get<double>(), row[1].get<double>(),
                            row[2].get<std::int64_t>(),
                            row[3].is_boolean() ? row[3].get<bool>() : row[3].get<int>() != 0});
    }
    return d;
}

// --- model comparison ----------------------------------------------------

struct ComparisonRow {
    std::string model_a, model_b;
    DistanceSummary stats;
};

inline void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "modelA,modelB,mean,stderr,n_pairs\n";
    for (const auto& r : rows)
        out << r.model_a << "," << r.model_b << "," << format_g12(r.stats.mean) << ","
            << format_g12(r.stats.stderr_of_mean) << "," << r.stats.n_pairs << "\n";
}

} // namespace netph
