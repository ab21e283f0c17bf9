#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "netph/centrality.hpp"
#include "netph/clique_complex.hpp"
#include "netph/curvature.hpp"
#include "netph/diagrams.hpp"
#include "netph/generators.hpp"
#include "netph/graph.hpp"
#include "netph/io.hpp"
#include "netph/parallel.hpp"
#include "netph/persistence.hpp"
#include "netph/svg.hpp"
#include "netph/weighting.hpp"

namespace netph {

// Which edge score drives the filtration weights.
enum class Scheme { Curvature, Centrality };

inline const char* scheme_name(Scheme s) {
    return s == Scheme::Curvature ? "curvature" : "centrality";
}

// Per-edge weights in (0,1) for the chosen scheme, quantized to the
// serialization precision so in-memory and re-loaded runs agree exactly.
inline std::vector<double> edge_weights_for_scheme(const Graph& g, Scheme scheme,
                                                   double epsilon = 1.0) {
    std::vector<double> w;
    if (scheme == Scheme::Curvature) {
        auto f = forman_ricci_all(g);
        w = normalize_curvature(f, epsilon);
    } else {
        auto raw = edge_betweenness_all(g);
        for (double& x : raw) x = quantize_g12(x);
        w = normalize_centrality(raw, epsilon);
    }
    for (double& x : w) x = quantize_g12(x);
    return w;
}

// Graph -> weighted clique complex in filtration order. Handles the
// edgeless case (every vertex at weight 1.0, a single stage).
inline FilteredComplex filtration_for_graph(const Graph& g, Scheme scheme, double epsilon = 1.0,
                                            int max_dim = 3) {
    auto simplices = enumerate_cliques(g, max_dim);
    std::vector<double> weights;
    if (g.edge_count() == 0) {
        weights.assign(simplices.size(), 1.0);
    } else {
        auto ew = edge_weights_for_scheme(g, scheme, epsilon);
        weights = extend_weights(simplices, g, ew);
    }
    return build_filtration(std::move(simplices), std::move(weights));
}

// Total persistence diagram (all dimensions merged) of a graph under the
// given scheme; the unit of comparison between models.
inline PersistenceDiagram total_diagram(const Graph& g, Scheme scheme, double epsilon = 1.0) {
    const FilteredComplex fc = filtration_for_graph(g, scheme, epsilon);
    const Reduction red = reduce(boundary_matrix(fc));
    return diagram_from_pairs(red, fc, -1);
}

struct PipelineConfig {
    std::optional<std::filesystem::path> edge_list; // exactly one input:
    std::optional<ModelSpec> model;                 // a file or a generator
    std::optional<vertex_t> vertex_count_hint;
    Scheme scheme = Scheme::Curvature;
    double epsilon = 1.0;
    int max_dim = 3;
    std::filesystem::path out_dir = ".";
    double svg_min_persistence = 0.0;
};

struct PipelineResult {
    Graph graph;
    FilteredComplex complex;
    Reduction reduction;
    BarcodeSet barcode;
    PersistenceDiagram total;
    std::vector<std::filesystem::path> artifacts;
};

// Runs the full chain graph -> edge scores -> weights -> filtration ->
// persistence and writes one artifact per stage into out_dir. Each artifact
// is exactly what the corresponding CLI stage emits, so any later stage can
// be re-run from the saved intermediates and reproduce the same bytes.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
    if (cfg.edge_list.has_value() == cfg.model.has_value())
        throw std::invalid_argument("run_pipeline: configure exactly one of edge_list / model");

    PipelineResult res;
    if (cfg.model) {
        res.graph = generate(*cfg.model);
    } else {
        std::ifstream in(*cfg.edge_list);
        if (!in) throw ParseError("cannot open " + cfg.edge_list->string());
        res.graph = load_edge_list(in, cfg.vertex_count_hint);
    }

    std::filesystem::create_directories(cfg.out_dir);
    auto emit = [&](const std::string& name, auto&& writer) {
        const auto path = cfg.out_dir / name;
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        writer(out);
        res.artifacts.push_back(path);
    };

    emit("graph.edges", [&](std::ostream& o) { write_edge_list(o, res.graph); });
    emit("vertex_ids.csv", [&](std::ostream& o) {
        o << "dense,original\n";
        for (std::size_t i = 0; i < res.graph.original_ids().size(); ++i)
            o << i << "," << res.graph.original_ids()[i] << "\n";
    });

    const bool edgeless = res.graph.edge_count() == 0;
    std::vector<double> edge_w;
    if (!edgeless) {
        if (cfg.scheme == Scheme::Curvature) {
            auto f = forman_ricci_all(res.graph);
            emit("curvature.csv", [&](std::ostream& o) { write_curvature_csv(o, res.graph, f); });
            edge_w = normalize_curvature(f, cfg.epsilon);
        } else {
            auto raw = edge_betweenness_all(res.graph);
            emit("ebc.csv", [&](std::ostream& o) { write_centrality_csv(o, res.graph, raw); });
            for (double& x : raw) x = quantize_g12(x);
            edge_w = normalize_centrality(raw, cfg.epsilon);
        }
        for (double& x : edge_w) x = quantize_g12(x);
    }

    auto simplices = enumerate_cliques(res.graph, cfg.max_dim);
    std::vector<double> weights = edgeless ? std::vector<double>(simplices.size(), 1.0)
                                           : extend_weights(simplices, res.graph, edge_w);
    emit("weights.csv", [&](std::ostream& o) { write_weights_csv(o, simplices, weights); });

    res.complex = build_filtration(std::move(simplices), std::move(weights));
    emit("filtration.csv", [&](std::ostream& o) { write_filtration_csv(o, res.complex); });

    res.reduction = reduce(boundary_matrix(res.complex));
    res.barcode = barcodes(res.reduction, res.complex);
    res.total = diagram_from_pairs(res.reduction, res.complex, -1);

    emit("barcode.csv", [&](std::ostream& o) { write_barcode_csv(o, res.barcode); });
    emit("pairs.json", [&](std::ostream& o) { write_pairs_json(o, res.reduction, res.complex); });
    emit("diagram.json", [&](std::ostream& o) { write_diagram_json(o, res.reduction, res.complex); });
    emit("barcode.svg", [&](std::ostream& o) {
        o << render_barcode_svg(res.barcode, {0, 1, 2, 3}, cfg.svg_min_persistence);
    });
    return res;
}

// Total diagrams for `samples` draws of one model. Sample j runs on its own
// seed stream for_stream(spec.seed, j); two specs with equal seeds see
// identical streams, which makes repeat runs and job counts irrelevant to
// the output.
inline std::vector<PersistenceDiagram> sample_diagrams(const ModelSpec& spec, int samples,
                                                       Scheme scheme, unsigned jobs = 1,
                                                       double epsilon = 1.0) {
    std::vector<PersistenceDiagram> out(samples);
    parallel_for(samples, jobs, [&](std::size_t j) {
        ModelSpec s = spec;
        s.seed = SplitMix64::for_stream(spec.seed, j).next();
        out[j] = total_diagram(generate(s), scheme, epsilon);
    });
    return out;
}

// Bottleneck statistics between two sampled models: all samples^2 cross
// pairs for distinct models, the C(samples,2) unordered pairs when a model
// is compared against itself.
inline DistanceSummary compare_sampled(const std::vector<PersistenceDiagram>& A,
                                       const std::vector<PersistenceDiagram>& B, bool same_model,
                                       unsigned jobs = 1) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    if (same_model) {
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = i + 1; j < B.size(); ++j) idx.emplace_back(i, j);
    } else {
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < B.size(); ++j) idx.emplace_back(i, j);
    }
    std::vector<double> d(idx.size());
    parallel_for(idx.size(), jobs, [&](std::size_t k) {
        d[k] = bottleneck(A[idx[k].first], B[idx[k].second]);
    });
    return summarize_distances(d);
}

// One spec'd model pair end to end.
inline DistanceSummary compare_models(const ModelSpec& a, const ModelSpec& b, int samples = 10,
                                      Scheme scheme = Scheme::Curvature, unsigned jobs = 1) {
    const bool same = a.family == b.family && a.seed == b.seed;
    auto da = sample_diagrams(a, samples, scheme, jobs);
    auto db = same ? da : sample_diagrams(b, samples, scheme, jobs);
    return compare_sampled(da, db, same, jobs);
}

struct ComparisonMatrix {
    std::vector<ModelSpec> models;
    std::vector<ComparisonRow> rows; // upper triangle incl. diagonal, row-major
};

// Full pairwise comparison across a model list. Diagrams are computed once
// per model and reused for every pair.
inline ComparisonMatrix run_model_comparison(const std::vector<ModelSpec>& models,
                                             int samples = 10, Scheme scheme = Scheme::Curvature,
                                             unsigned jobs = 1) {
    ComparisonMatrix out;
    out.models = models;
    std::vector<std::vector<PersistenceDiagram>> diagrams(models.size());
    for (std::size_t i = 0; i < models.size(); ++i)
        diagrams[i] = sample_diagrams(models[i], samples, scheme, jobs);
    for (std::size_t i = 0; i < models.size(); ++i)
        for (std::size_t j = i; j < models.size(); ++j) {
            ComparisonRow row;
            row.model_a = family_name(models[i].family);
            row.model_b = family_name(models[j].family);
            row.stats = compare_sampled(diagrams[i], diagrams[j], i == j, jobs);
            out.rows.push_back(std::move(row));
        }
    return out;
}

} // namespace netph
