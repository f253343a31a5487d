#include "stocnet/census.hpp"
#include "stocnet/decomposition.hpp"
#include "stocnet/error.hpp"
#include "stocnet/generators.hpp"
#include "stocnet/indices.hpp"
#include "stocnet/suite.hpp"
#include "stocnet/sweep.hpp"
#include "stocnet/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace stocnet;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed_check = 1;
constexpr int exit_bad_input = 2;

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    return out;
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
    auto p = out;
    p.replace_filename(out.stem().string() + suffix);
    return p;
}

// ---- generate

struct GenerateArgs {
    std::string model;
    std::int64_t n = 0, k = 6, m = 3, r = 2, rows = 0, cols = 0, edges = 0;
    double p = 0.0, q = 0.0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_generate(const GenerateArgs& a) {
    static const std::map<std::string, Family> families{
        {"ring", Family::ring},
        {"xring", Family::extended_ring},
        {"sqlattice", Family::square_lattice},
        {"trilattice", Family::triangular_lattice},
        {"torus", Family::square_torus},
        {"ws", Family::watts_strogatz},
        {"hk", Family::holme_kim},
        {"ba", Family::barabasi_albert},
        {"er", Family::erdos_renyi},
    };
    GeneratorSpec spec;
    spec.family = families.at(a.model);
    spec.n = a.n;
    spec.rows = a.rows;
    spec.cols = a.cols;
    spec.half_width = a.r;
    spec.base_degree = a.k;
    spec.edges_per_node = a.m;
    spec.rewire = a.p;
    spec.triad = a.q;
    spec.edge_count = a.edges;
    spec.seed = a.seed;
    auto g = generate(spec);
    auto out = open_out(a.out);
    out << "# " << a.model << " nodes " << g.node_count() << " edges " << g.edge_count() << " seed " << a.seed << '\n';
    write_edge_list(out, g);
    std::cout << "wrote " << g.node_count() << " nodes, " << g.edge_count() << " edges to " << a.out << '\n';
    return exit_ok;
}

// ---- analyze

struct AnalyzeArgs {
    std::string graph;
    std::optional<std::int64_t> start;
    bool all_starts = false;
    std::optional<std::size_t> sample;
    std::uint64_t sample_seed = 0;
    bool dump = false;
    std::string out;
};

NodeId node_for_label(const Graph& g, Label label) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.label(v) == label) return v;
    throw Error(ErrorKind::IdOutOfRange, "no node labelled " + std::to_string(label));
}

void write_single_start(const Graph& g, const GenerationDecomposition& d, const StocCensus& c, std::ostream& out) {
    auto abs = local_absolute_index(d);
    auto rel = local_relative_index(d);
    out << "start,generation,n_abs,r_rel,stoc,cumulative_stoc\n";
    for (std::size_t m = 0; m < abs.values.size(); ++m) {
        out << g.label(d.start) << ',' << m << ',' << abs.values[m] << ',';
        if (m < rel.values.size()) out << rel.values[m];
        out << ',' << c.per_gen_total[m] << ',' << c.cumulative[m] << '\n';
    }
}

int run_analyze(const AnalyzeArgs& a) {
    auto g = load_edge_list(fs::path(a.graph));
    const fs::path out_path(a.out);

    std::vector<NodeId> starts;
    if (a.start) {
        starts.push_back(node_for_label(g, *a.start));
        auto d = decompose(g, starts.front());
        auto c = census(g, d);
        auto out = open_out(out_path);
        write_single_start(g, d, c, out);
    } else {
        auto sampling = a.sample ? StartSampling::sample(*a.sample, a.sample_seed) : StartSampling::all();
        starts = select_starts(g, sampling);
        emit_csv(analyze_graph(g, sampling, fs::path(a.graph).stem().string()), out_path);
    }

    auto census_out = open_out(sibling(out_path, ".census.csv"));
    census_out << "start,generation,nodes,count\n";
    auto summary_out = open_out(sibling(out_path, ".summary.csv"));
    summary_out << "start,generation,per_gen_total,cumulative\n";
    std::ofstream nodes_out, edges_out;
    if (a.dump) {
        nodes_out = open_out(sibling(out_path, ".nodes.csv"));
        nodes_out << "start,node,generation,parent\n";
        edges_out = open_out(sibling(out_path, ".edges.csv"));
        edges_out << "start,u,v,generation,class\n";
    }
    for (NodeId s : starts) {
        auto d = decompose(g, s);
        auto c = census(g, d);
        const auto start_label = g.label(s);
        for (const auto& [key, count] : c.counts)
            census_out << start_label << ',' << key.first << ',' << key.second << ',' << count << '\n';
        for (std::size_t m = 0; m < c.per_gen_total.size(); ++m)
            summary_out << start_label << ',' << m << ',' << c.per_gen_total[m] << ',' << c.cumulative[m] << '\n';
        if (!a.dump) continue;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (d.node_gen[v] == unreached) continue;
            nodes_out << start_label << ',' << g.label(v) << ',' << d.node_gen[v] << ',';
            if (d.parent[v] != no_parent) nodes_out << g.label(d.parent[v]);
            nodes_out << '\n';
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (d.edge_class[e] == EdgeClass::unreached) continue;
            const auto& edge = g.edge(e);
            edges_out << start_label << ',' << g.label(edge.u) << ',' << g.label(edge.v) << ',' << d.edge_gen[e] << ','
                      << (d.edge_class[e] == EdgeClass::primary ? "primary" : "secondary") << '\n';
        }
    }
    std::cout << "analyzed " << starts.size() << " start(s); wrote " << a.out << '\n';
    return exit_ok;
}

// ---- sweep

struct SweepArgs {
    std::string config;
    std::string out = "sweep-out";
    std::vector<std::pair<std::string, std::string>> overrides;
};

int run_sweep_command(const SweepArgs& a) {
    SweepConfig cfg = a.config.empty() ? SweepConfig{} : load_config(fs::path(a.config));
    // a model flag resets the defaults before the other flags apply
    for (const auto& [key, value] : a.overrides)
        if (key == "model") apply_setting(cfg, key, value);
    for (const auto& [key, value] : a.overrides)
        if (key != "model") apply_setting(cfg, key, value);
    cfg.validate();

    const fs::path dir(a.out);
    fs::create_directories(dir);
    auto result = run_sweep(cfg);
    emit_csv(result, dir / "sweep.csv");

    auto summary_out = open_out(dir / "summary.csv");
    summary_out << "model,parameter,n_peak_generation,n_peak_value,stoc_peak_generation,stoc_peak_value,euler_total_mean\n";
    for (const auto& s : summarize(result))
        summary_out << s.model << ',' << s.parameter << ',' << s.n_peak_generation << ',' << s.n_peak_value << ','
                    << s.stoc_peak_generation << ',' << s.stoc_peak_value << ',' << s.euler_total_mean << '\n';

    nlohmann::json meta;
    meta["model"] = result.model;
    meta["n"] = cfg.n;
    meta["degree"] = cfg.degree;
    meta["grid"] = cfg.grid;
    meta["replicates"] = cfg.replicates;
    meta["base_seed"] = cfg.base_seed;
    meta["sample"] = cfg.sampling.sample_size ? nlohmann::json(*cfg.sampling.sample_size) : nlohmann::json("all");
    meta["sample_seed"] = cfg.sampling.seed;
    meta["padding"] = "zero";
    meta["started_at"] = result.started_at;
    meta["finished_at"] = result.finished_at;
    auto meta_out = open_out(dir / "metadata.json");
    meta_out << meta.dump(2) << '\n';

    std::cout << "wrote " << result.rows.size() << " rows to " << (dir / "sweep.csv").string() << '\n';
    return exit_ok;
}

// ---- verify

int run_verify(const std::string& suite, std::uint64_t seed, int per_family) {
    std::vector<CorpusGraph> corpus;
    if (suite == "lattices" || suite == "all") corpus = lattice_corpus();
    if (suite == "random" || suite == "all")
        for (auto& item : random_corpus(seed, per_family)) corpus.push_back(std::move(item));

    std::size_t failed = 0;
    std::size_t total = 0;
    for (const auto& item : corpus) {
        for (const auto& r : verify_graph(item, seed)) {
            ++total;
            if (!r.passed) ++failed;
            std::printf("%-4s %-24s %-20s %s\n", r.passed ? "ok" : "FAIL", r.graph.c_str(), r.check.c_str(),
                        r.detail.c_str());
        }
    }
    std::printf("%zu checks, %zu failed\n", total, failed);
    return failed == 0 ? exit_ok : exit_failed_check;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generation decomposition, propagation indices and cycle census for networks"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
    generate_cmd->add_option("--model", gen.model, "Graph family")
        ->required()
        ->check(CLI::IsMember({"ring", "xring", "sqlattice", "trilattice", "torus", "ws", "hk", "ba", "er"}));
    generate_cmd->add_option("--n", gen.n, "Node count");
    generate_cmd->add_option("--k", gen.k, "Lattice degree for ws");
    generate_cmd->add_option("--m", gen.m, "Edges per new node for hk and ba");
    generate_cmd->add_option("--r", gen.r, "Half-width for xring");
    generate_cmd->add_option("--rows", gen.rows);
    generate_cmd->add_option("--cols", gen.cols);
    generate_cmd->add_option("--p", gen.p, "Rewiring probability");
    generate_cmd->add_option("--q", gen.q, "Triad formation probability");
    generate_cmd->add_option("--edges", gen.edges, "Edge count for er");
    generate_cmd->add_option("--seed", gen.seed);
    generate_cmd->add_option("--out", gen.out)->required();

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Indices and cycle census of an edge-list graph");
    analyze_cmd->add_option("--graph", an.graph, "Edge list")->required()->check(CLI::ExistingFile);
    auto* start_opt = analyze_cmd->add_option("--start", an.start, "Start node label");
    auto* all_opt = analyze_cmd->add_flag("--all-starts", an.all_starts, "Average over every start (default)");
    auto* sample_opt = analyze_cmd->add_option("--sample", an.sample, "Average over a random sample of starts");
    analyze_cmd->add_option("--sample-seed", an.sample_seed)->needs(sample_opt);
    start_opt->excludes(all_opt)->excludes(sample_opt);
    all_opt->excludes(sample_opt);
    analyze_cmd->add_flag("--dump-decomposition", an.dump, "Also write per-node and per-edge tables");
    analyze_cmd->add_option("--out", an.out, "Output CSV")->required();

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep over ws or hk graphs");
    sweep_cmd->add_option("--config", sw.config, "key=value config file")->check(CLI::ExistingFile);
    sweep_cmd->add_option("--out", sw.out, "Output directory")->capture_default_str();
    std::map<std::string, std::string> sweep_flags;
    for (const char* key : {"model", "n", "k", "m", "grid", "replicates", "seed", "sample", "sample-seed",
                            "max-regenerations"})
        sweep_cmd->add_option(std::string("--") + key, sweep_flags[key], std::string("Overrides config key ") + key);

    std::string suite = "all";
    std::uint64_t verify_seed = 1;
    int per_family = 5;
    auto* verify_cmd = app.add_subcommand("verify", "Check the exact identities on a graph corpus");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"lattices", "random", "all"}));
    verify_cmd->add_option("--seed", verify_seed);
    verify_cmd->add_option("--per-family", per_family, "Random graphs per family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (*generate_cmd) return run_generate(gen);
        if (*analyze_cmd) return run_analyze(an);
        if (*sweep_cmd) {
            for (const auto& [key, value] : sweep_flags)
                if (sweep_cmd->count("--" + key) > 0) sw.overrides.emplace_back(key, value);
            return run_sweep_command(sw);
        }
        if (*verify_cmd) return run_verify(suite, verify_seed, per_family);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    return exit_ok;
}
