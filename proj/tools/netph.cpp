// netph: persistent homology of unweighted networks through curvature- or
// centrality-weighted clique filtrations. Subcommands mirror the pipeline
// stages; every stage reads the previous stage's artifact, so intermediate
// results stay inspectable and re-runnable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netph/netph.hpp"

namespace {

namespace fs = std::filesystem;

fs::path default_out_dir() {
    if (const char* env = std::getenv("NETPH_OUT_DIR")) return fs::path(env);
    return fs::path(".");
}

netph::Graph load_graph(const std::string& path, std::optional<netph::vertex_t> hint) {
    std::ifstream in(path);
    if (!in) throw netph::ParseError("cannot open " + path);
    return netph::load_edge_list(in, hint);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

netph::Scheme parse_scheme(const std::string& s) {
    if (s == "curvature") return netph::Scheme::Curvature;
    if (s == "centrality") return netph::Scheme::Centrality;
    throw netph::ParseError("unknown scheme '" + s + "' (use curvature or centrality)");
}

netph::ModelFamily parse_family(const std::string& s) {
    for (auto f : {netph::ModelFamily::ER, netph::ModelFamily::WS, netph::ModelFamily::BA,
                   netph::ModelFamily::Hyperbolic, netph::ModelFamily::Spherical})
        if (s == netph::family_name(f)) return f;
    throw netph::ParseError("unknown model '" + s + "'");
}

struct GraphArgs {
    std::string path;
    std::optional<netph::vertex_t> hint;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", path, "edge list file")->required();
        cmd->add_option("--n-hint", hint,
                        "vertex count; retains trailing isolated vertices and "
                        "treats ids as final indices");
    }
};

int run_cli(int argc, char** argv) {
    CLI::App app{"persistent homology of unweighted networks via weighted clique filtrations"};
    app.require_subcommand(1);

    // --- generate ---
    auto* generate = app.add_subcommand("generate", "sample a random graph model");
    std::string gen_model = "er", gen_out = "-";
    netph::ModelSpec spec;
    spec.n = 1000;
    double gen_p = -1.0, gen_gamma = 2.0, gen_ktarget = 4.0;
    int gen_k = 4, gen_m = 2;
    std::uint64_t gen_seed = 1;
    generate->add_option("--model", gen_model, "er | ws | ba | hyperbolic | spherical")->required();
    generate->add_option("--n", spec.n, "vertex count")->required();
    generate->add_option("--p", gen_p, "edge probability (er) / rewiring probability (ws)");
    generate->add_option("--k", gen_k, "ring lattice degree (ws)");
    generate->add_option("--m", gen_m, "attachments per vertex (ba)");
    generate->add_option("--gamma", gen_gamma, "target power-law exponent (hyperbolic)");
    generate->add_option("--k-target", gen_ktarget, "target mean degree (hyperbolic, spherical)");
    generate->add_option("--seed", gen_seed, "RNG seed");
    generate->add_option("--out", gen_out, "output edge list ('-' = stdout)");

    // --- curvature ---
    auto* curvature = app.add_subcommand("curvature", "edge curvature of a graph");
    GraphArgs curv_graph;
    std::string curv_out = "-";
    curv_graph.attach(curvature);
    curvature->add_option("--out", curv_out, "output CSV ('-' = stdout)");

    // --- ebc ---
    auto* ebc = app.add_subcommand("ebc", "shortest-path edge betweenness");
    GraphArgs ebc_graph;
    std::string ebc_out = "-";
    bool ebc_halved = false;
    ebc_graph.attach(ebc);
    ebc->add_option("--out", ebc_out, "output CSV ('-' = stdout)");
    ebc->add_flag("--halved", ebc_halved, "report the unordered-pair convention (values / 2)");

    // --- weights ---
    auto* weights = app.add_subcommand("weights", "weights for every clique-complex simplex");
    GraphArgs w_graph;
    std::string w_out = "-", w_scheme = "curvature", w_scores;
    double w_epsilon = 1.0;
    w_graph.attach(weights);
    weights->add_option("--scheme", w_scheme, "curvature | centrality");
    weights->add_option("--scores", w_scores, "edge score CSV from the curvature/ebc stage");
    weights->add_option("--epsilon", w_epsilon, "normalization padding");
    weights->add_option("--out", w_out, "output CSV ('-' = stdout)");

    // --- filtration ---
    auto* filtration = app.add_subcommand("filtration", "sorted filtration from simplex weights");
    std::string f_weights, f_out = "-";
    filtration->add_option("weights", f_weights, "weights CSV from the weights stage")->required();
    filtration->add_option("--out", f_out, "output CSV ('-' = stdout)");

    // --- persist ---
    auto* persist = app.add_subcommand("persist", "persistence pairs, barcode and diagrams");
    std::string p_filtration, p_barcode, p_pairs, p_diagram;
    persist->add_option("filtration", p_filtration, "filtration CSV")->required();
    persist->add_option("--out-barcode", p_barcode, "barcode CSV");
    persist->add_option("--out-pairs", p_pairs, "pairs JSON");
    persist->add_option("--out-diagram", p_diagram, "diagram JSON");

    // --- barcode-svg ---
    auto* svg = app.add_subcommand("barcode-svg", "render a barcode CSV as SVG");
    std::string s_barcode, s_out = "-", s_dims = "0,1,2,3";
    double s_minpers = 0.0;
    svg->add_option("barcode", s_barcode, "barcode CSV")->required();
    svg->add_option("--dims", s_dims, "comma-separated dimensions to draw");
    svg->add_option("--min-persistence", s_minpers, "drop bars shorter than this");
    svg->add_option("--out", s_out, "output SVG ('-' = stdout)");

    // --- bottleneck ---
    auto* bot = app.add_subcommand("bottleneck", "bottleneck distance between two diagram files");
    std::string b_a, b_b, b_key = "total";
    bot->add_option("a", b_a, "diagram JSON")->required();
    bot->add_option("b", b_b, "diagram JSON")->required();
    bot->add_option("--key", b_key, "diagram key: 0..3 or total");

    // --- run ---
    auto* run = app.add_subcommand("run", "full pipeline, one artifact per stage");
    std::string r_graph, r_model, r_scheme = "curvature", r_outdir = default_out_dir().string();
    netph::ModelSpec r_spec;
    r_spec.n = 1000;
    double r_p = -1.0, r_gamma = 2.0, r_ktarget = 4.0, r_epsilon = 1.0, r_minpers = 0.0;
    int r_k = 4, r_m = 2;
    std::uint64_t r_seed = 1;
    std::optional<netph::vertex_t> r_hint;
    run->add_option("graph", r_graph, "edge list file (omit when --model is used)");
    run->add_option("--model", r_model, "generate input instead: er | ws | ba | hyperbolic | spherical");
    run->add_option("--n", r_spec.n, "vertex count (with --model)");
    run->add_option("--p", r_p, "er/ws probability");
    run->add_option("--k", r_k, "ws lattice degree");
    run->add_option("--m", r_m, "ba attachments");
    run->add_option("--gamma", r_gamma, "hyperbolic exponent");
    run->add_option("--k-target", r_ktarget, "hyperbolic/spherical mean degree");
    run->add_option("--seed", r_seed, "RNG seed (with --model)");
    run->add_option("--n-hint", r_hint, "vertex count hint for edge list input");
    run->add_option("--scheme", r_scheme, "curvature | centrality");
    run->add_option("--epsilon", r_epsilon, "normalization padding");
    run->add_option("--min-persistence", r_minpers, "SVG: drop bars shorter than this");
    run->add_option("--out-dir", r_outdir, "artifact directory (default $NETPH_OUT_DIR or .)");

    // --- compare-models ---
    auto* cmp = app.add_subcommand("compare-models",
                                   "pairwise bottleneck statistics across the standard models");
    netph::vertex_t c_n = 1000;
    double c_degree = 4.0, c_epsilon = 1.0;
    int c_samples = 10;
    unsigned c_jobs = 1;
    std::uint64_t c_seed = 1;
    std::string c_scheme = "curvature", c_out = "-";
    cmp->add_option("--n", c_n, "vertex count per sample");
    cmp->add_option("--degree", c_degree, "shared target mean degree");
    cmp->add_option("--samples", c_samples, "samples per model");
    cmp->add_option("--seed", c_seed, "master seed");
    cmp->add_option("--scheme", c_scheme, "curvature | centrality");
    cmp->add_option("--epsilon", c_epsilon, "normalization padding");
    cmp->add_option("--jobs", c_jobs, "worker threads across graphs and pairs");
    cmp->add_option("--out", c_out, "output CSV ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto write_to = [](const std::string& path, auto&& writer) {
        if (path == "-") {
            writer(std::cout);
        } else {
            auto out = open_out(path);
            writer(out);
        }
    };

    auto fill_spec = [](netph::ModelSpec& s, const std::string& model, double p, int k, int m,
                        double gamma, double ktarget, std::uint64_t seed) {
        s.family = parse_family(model);
        s.seed = seed;
        s.k = k;
        s.m = m;
        s.gamma = gamma;
        s.k_target = ktarget;
        switch (s.family) {
            case netph::ModelFamily::ER: s.p = p < 0 ? 4.0 / s.n : p; break;
            case netph::ModelFamily::WS: s.p = p < 0 ? 0.5 : p; break;
            default: s.p = std::max(p, 0.0); break;
        }
    };

    if (generate->parsed()) {
        fill_spec(spec, gen_model, gen_p, gen_k, gen_m, gen_gamma, gen_ktarget, gen_seed);
        const netph::Graph g = netph::generate(spec);
        write_to(gen_out, [&](std::ostream& o) { netph::write_edge_list(o, g); });
    } else if (curvature->parsed()) {
        const netph::Graph g = load_graph(curv_graph.path, curv_graph.hint);
        const auto f = netph::forman_ricci_all(g);
        write_to(curv_out, [&](std::ostream& o) { netph::write_curvature_csv(o, g, f); });
    } else if (ebc->parsed()) {
        const netph::Graph g = load_graph(ebc_graph.path, ebc_graph.hint);
        const auto c = netph::edge_betweenness_all(g, ebc_halved);
        write_to(ebc_out, [&](std::ostream& o) { netph::write_centrality_csv(o, g, c); });
    } else if (weights->parsed()) {
        const netph::Graph g = load_graph(w_graph.path, w_graph.hint);
        const netph::Scheme scheme = parse_scheme(w_scheme);
        const auto simplices = netph::enumerate_cliques(g);
        std::vector<double> simplex_w;
        if (g.edge_count() == 0) {
            simplex_w.assign(simplices.size(), 1.0);
        } else {
            std::vector<double> edge_w;
            if (!w_scores.empty()) {
                std::ifstream in(w_scores);
                if (!in) throw netph::ParseError("cannot open " + w_scores);
                if (scheme == netph::Scheme::Curvature) {
                    auto scores = netph::read_edge_scores_csv(in, g, "u,v,F");
                    std::vector<long long> f(scores.size());
                    for (std::size_t i = 0; i < scores.size(); ++i)
                        f[i] = std::llround(scores[i]);
                    edge_w = netph::normalize_curvature(f, w_epsilon);
                } else {
                    auto scores = netph::read_edge_scores_csv(in, g, "u,v,ebc");
                    edge_w = netph::normalize_centrality(scores, w_epsilon);
                }
                for (double& x : edge_w) x = netph::quantize_g12(x);
            } else {
                edge_w = netph::edge_weights_for_scheme(g, scheme, w_epsilon);
            }
            simplex_w = netph::extend_weights(simplices, g, edge_w);
        }
        write_to(w_out, [&](std::ostream& o) { netph::write_weights_csv(o, simplices, simplex_w); });
    } else if (filtration->parsed()) {
        std::ifstream in(f_weights);
        if (!in) throw netph::ParseError("cannot open " + f_weights);
        auto ws = netph::read_weights_csv(in);
        const auto fc = netph::build_filtration(std::move(ws.simplices), std::move(ws.weights));
        write_to(f_out, [&](std::ostream& o) { netph::write_filtration_csv(o, fc); });
    } else if (persist->parsed()) {
        std::ifstream in(p_filtration);
        if (!in) throw netph::ParseError("cannot open " + p_filtration);
        const auto fc = netph::read_filtration_csv(in);
        const auto red = netph::reduce(netph::boundary_matrix(fc));
        if (p_barcode.empty() && p_pairs.empty() && p_diagram.empty())
            netph::write_barcode_csv(std::cout, netph::barcodes(red, fc));
        if (!p_barcode.empty())
            write_to(p_barcode, [&](std::ostream& o) { netph::write_barcode_csv(o, netph::barcodes(red, fc)); });
        if (!p_pairs.empty())
            write_to(p_pairs, [&](std::ostream& o) { netph::write_pairs_json(o, red, fc); });
        if (!p_diagram.empty())
            write_to(p_diagram, [&](std::ostream& o) { netph::write_diagram_json(o, red, fc); });
    } else if (svg->parsed()) {
        std::ifstream in(s_barcode);
        if (!in) throw netph::ParseError("cannot open " + s_barcode);
        const auto bc = netph::read_barcode_csv(in);
        std::vector<int> dims;
        for (const auto& tok : netph::detail::split(s_dims, ','))
            dims.push_back(static_cast<int>(netph::detail::to_int(tok, 0)));
        write_to(s_out, [&](std::ostream& o) {
            o << netph::render_barcode_svg(bc, dims, s_minpers);
        });
    } else if (bot->parsed()) {
        std::ifstream ia(b_a), ib(b_b);
        if (!ia) throw netph::ParseError("cannot open " + b_a);
        if (!ib) throw netph::ParseError("cannot open " + b_b);
        const auto da = netph::read_diagram_json(ia, b_key);
        const auto db = netph::read_diagram_json(ib, b_key);
        std::cout << netph::format_g12(netph::bottleneck(da, db)) << "\n";
    } else if (run->parsed()) {
        netph::PipelineConfig cfg;
        cfg.scheme = parse_scheme(r_scheme);
        cfg.epsilon = r_epsilon;
        cfg.svg_min_persistence = r_minpers;
        cfg.out_dir = r_outdir;
        cfg.vertex_count_hint = r_hint;
        if (!r_model.empty()) {
            fill_spec(r_spec, r_model, r_p, r_k, r_m, r_gamma, r_ktarget, r_seed);
            cfg.model = r_spec;
        } else if (!r_graph.empty()) {
            cfg.edge_list = r_graph;
        } else {
            throw netph::ParseError("run: give an edge list or --model");
        }
        const auto res = netph::run_pipeline(cfg);
        for (const auto& p : res.artifacts) std::cout << p.string() << "\n";
    } else if (cmp->parsed()) {
        const auto models = netph::standard_models(c_n, c_degree, c_seed);
        const auto matrix =
            netph::run_model_comparison(models, c_samples, parse_scheme(c_scheme), c_jobs);
        write_to(c_out, [&](std::ostream& o) { netph::write_comparison_csv(o, matrix.rows); });
        if (c_out != "-") {
            // report view: mean +/- standard error to two decimals
            std::fprintf(stdout, "%-12s %-12s %8s %8s %8s\n", "modelA", "modelB", "mean", "se",
                         "pairs");
            for (const auto& r : matrix.rows)
                std::fprintf(stdout, "%-12s %-12s %8.2f %8.2f %8zu\n", r.model_a.c_str(),
                             r.model_b.c_str(), r.stats.mean, r.stats.stderr_of_mean,
                             r.stats.n_pairs);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const netph::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const netph::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const netph::CalibrationError& e) {
        std::cerr << "calibration failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
