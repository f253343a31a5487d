#pragma once

#include "stocnet/graph.hpp"
#include "stocnet/indices.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace stocnet {

enum class Model { ws, hk };

const char* to_string(Model m) noexcept;
Model parse_model(const std::string& name);

/// One parameter sweep over a random network family.
///
/// ws: watts_strogatz(n, degree, p) over p in grid (default 2^-m, m = 0..10).
/// hk: holme_kim(n, degree, q) over q in grid (default 0.0, 0.1, ..., 1.0).
/// Replicate r of every grid point uses seed base_seed + r; a disconnected
/// graph is regenerated with seed base_seed + r + replicates * attempt.
struct SweepConfig {
    Model model = Model::ws;
    std::int64_t n = 3000;
    std::int64_t degree = 6;  // k for ws, m for hk
    std::vector<double> grid = default_grid(Model::ws);
    int replicates = 10;
    std::uint64_t base_seed = 1;
    StartSampling sampling;
    int max_regenerations = 100;

    static SweepConfig defaults(Model model);
    static std::vector<double> default_grid(Model model);

    // Throws ConfigError.
    void validate() const;
};

/// key=value lines ('#' comments). Keys: model, n, k, m, grid (comma list),
/// replicates, seed, sample (0 = all starts), sample-seed, max-regenerations.
/// Unset keys keep the model defaults.
SweepConfig parse_config(std::istream& in);
SweepConfig load_config(const std::filesystem::path& path);

// Applies one key=value setting; shared by the config parser and CLI flags.
void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value);

struct SweepRow {
    std::string model;
    double parameter = 0.0;
    int generation = 0;
    double n_abs_mean = 0.0;
    double n_abs_std = 0.0;
    double r_rel_mean = 0.0;
    double r_rel_std = 0.0;
    double stoc_mean = 0.0;
    double stoc_std = 0.0;
    std::size_t support_count = 0;  // (replicate, start) pairs with R_M defined
};

struct ReplicateRecord {
    double parameter = 0.0;
    int replicate = 0;
    std::uint64_t seed = 0;
    int regenerations = 0;
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    std::int64_t euler_total = 0;
    // Per-start sum of the per-generation cycle series; equal to euler_total
    // for every start unless stoc_sum_mismatches > 0.
    std::int64_t stoc_sum = 0;
    std::size_t stoc_sum_mismatches = 0;
};

/// Rows ordered by (parameter in grid order, generation). Means and standard
/// deviations pool every (replicate, start) pair; series shorter than the
/// longest one count as 0 past their end, except r_rel which averages only
/// where defined.
struct SweepResult {
    std::string model;
    SweepConfig config;
    std::vector<SweepRow> rows;
    std::vector<ReplicateRecord> replicates;
    std::string started_at;
    std::string finished_at;
};

SweepResult run_sweep(const SweepConfig& cfg);

// A sweep of one fixed graph (one grid point, one replicate).
SweepResult analyze_graph(const Graph& g, const StartSampling& sampling, const std::string& name = "graph");

/// CSV with '#' metadata lines, the header
/// model,parameter,generation,n_abs_mean,n_abs_std,r_rel_mean,r_rel_std,stoc_mean,stoc_std,support_count
/// and floats at 6 significant digits. Timestamps are not written, so equal
/// inputs give identical bytes.
void emit_csv(const SweepResult& r, std::ostream& out);
void emit_csv(const SweepResult& r, const std::filesystem::path& path);

// Reads the rows back from emit_csv output.
std::vector<SweepRow> parse_sweep_csv(std::istream& in);

struct SummaryRow {
    std::string model;
    double parameter = 0.0;
    int n_peak_generation = 0;
    double n_peak_value = 0.0;
    int stoc_peak_generation = 0;
    double stoc_peak_value = 0.0;
    double euler_total_mean = 0.0;
};

// Peaks use the first generation attaining the maximum.
std::vector<SummaryRow> summarize(const SweepResult& r);

} // namespace stocnet
