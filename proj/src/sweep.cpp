#include "stocnet/sweep.hpp"

#include "stocnet/census.hpp"
#include "stocnet/error.hpp"
#include "stocnet/generators.hpp"

#include "parallel.hpp"
#include "profile.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace stocnet {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::int64_t to_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
        x = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw Error(ErrorKind::ConfigError, key + ": '" + value + "' is not an integer");
    return x;
}

double to_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw Error(ErrorKind::ConfigError, key + ": '" + value + "' is not a number");
    return x;
}

std::string format_g(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string utc_now() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Running sums for one grid point; generations grow on demand. Pairs that do
// not reach a generation contribute zeros to the n and stoc moments, so only
// their number (pairs) is needed.
struct Accumulator {
    std::size_t pairs = 0;
    std::vector<double> n_sum, n_sq, s_sum, s_sq, r_sum, r_sq;
    std::vector<std::size_t> r_count;

    void grow(std::size_t len) {
        if (n_sum.size() >= len) return;
        for (auto* v : {&n_sum, &n_sq, &s_sum, &s_sq, &r_sum, &r_sq}) v->resize(len, 0.0);
        r_count.resize(len, 0);
    }

    void add(const std::vector<std::int64_t>& nodes_at, const std::vector<std::int64_t>& stoc) {
        ++pairs;
        grow(std::max(nodes_at.size(), stoc.size()));
        for (std::size_t m = 0; m < nodes_at.size(); ++m) {
            auto x = static_cast<double>(nodes_at[m]);
            n_sum[m] += x;
            n_sq[m] += x * x;
            if (m + 1 < nodes_at.size()) {
                double r = static_cast<double>(nodes_at[m + 1]) / x;
                r_sum[m] += r;
                r_sq[m] += r * r;
                ++r_count[m];
            }
        }
        for (std::size_t m = 0; m < stoc.size(); ++m) {
            auto x = static_cast<double>(stoc[m]);
            s_sum[m] += x;
            s_sq[m] += x * x;
        }
    }

    static std::pair<double, double> moments(double sum, double sq, std::size_t count) {
        if (count == 0) return {0.0, 0.0};
        const double mean = sum / static_cast<double>(count);
        return {mean, std::sqrt(std::max(0.0, sq / static_cast<double>(count) - mean * mean))};
    }

    void emit(const std::string& model, double parameter, std::vector<SweepRow>& rows) const {
        for (std::size_t m = 0; m < n_sum.size(); ++m) {
            SweepRow row;
            row.model = model;
            row.parameter = parameter;
            row.generation = static_cast<int>(m);
            std::tie(row.n_abs_mean, row.n_abs_std) = moments(n_sum[m], n_sq[m], pairs);
            std::tie(row.r_rel_mean, row.r_rel_std) = moments(r_sum[m], r_sq[m], r_count[m]);
            std::tie(row.stoc_mean, row.stoc_std) = moments(s_sum[m], s_sq[m], pairs);
            row.support_count = r_count[m];
            rows.push_back(row);
        }
    }
};

struct StartSeries {
    std::vector<std::int64_t> nodes_at;
    std::vector<std::int64_t> stoc;
};

// Profiles every selected start of g into acc and fills the graph-level
// fields of rec.
void accumulate_graph(const Graph& g, const StartSampling& sampling, Accumulator& acc, ReplicateRecord& rec) {
    const auto starts = select_starts(g, sampling);
    std::vector<StartSeries> series(starts.size());
    detail::parallel_for(starts.size(), [&](std::size_t i) {
        thread_local detail::ProfileScratch scratch;
        const auto& p = scratch.run(g, starts[i]);
        series[i].nodes_at = p.nodes_at;
        series[i].stoc = detail::stoc_by_difference(p.nodes_at, p.edges_at);
    });

    rec.nodes = g.node_count();
    rec.edges = g.edge_count();
    rec.euler_total = 1 + rec.edges - rec.nodes;
    rec.stoc_sum_mismatches = 0;
    bool first = true;
    for (const auto& s : series) {
        std::int64_t sum = 0;
        for (auto x : s.stoc) sum += x;
        if (first) rec.stoc_sum = sum;
        first = false;
        if (sum != rec.euler_total) {
            if (rec.stoc_sum_mismatches == 0) rec.stoc_sum = sum;
            ++rec.stoc_sum_mismatches;
        }
        acc.add(s.nodes_at, s.stoc);
    }
}

std::string sampling_text(const StartSampling& s) {
    if (!s.sample_size) return "all";
    return "sample(" + std::to_string(*s.sample_size) + ",seed=" + std::to_string(s.seed) + ")";
}

} // namespace

const char* to_string(Model m) noexcept { return m == Model::ws ? "ws" : "hk"; }

Model parse_model(const std::string& name) {
    if (name == "ws") return Model::ws;
    if (name == "hk") return Model::hk;
    throw Error(ErrorKind::ConfigError, "unknown model '" + name + "' (expected ws or hk)");
}

std::vector<double> SweepConfig::default_grid(Model model) {
    std::vector<double> grid;
    if (model == Model::ws) {
        for (int m = 0; m <= 10; ++m) grid.push_back(std::ldexp(1.0, -m));
    } else {
        for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    }
    return grid;
}

SweepConfig SweepConfig::defaults(Model model) {
    SweepConfig cfg;
    cfg.model = model;
    cfg.degree = model == Model::ws ? 6 : 3;
    cfg.grid = default_grid(model);
    return cfg;
}

void SweepConfig::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); };
    if (grid.empty()) fail("parameter grid is empty");
    for (double x : grid)
        if (!(x >= 0.0 && x <= 1.0)) fail("grid value " + format_g(x) + " not in [0, 1]");
    if (replicates < 1) fail("replicates must be >= 1");
    if (max_regenerations < 0) fail("max-regenerations must be >= 0");
    if (model == Model::ws && (degree < 2 || degree % 2 != 0 || degree >= n))
        fail("ws needs even k with 2 <= k < n");
    if (model == Model::hk && (degree < 1 || degree >= n)) fail("hk needs 1 <= m < n");
    if (sampling.sample_size && (*sampling.sample_size == 0 || static_cast<std::int64_t>(*sampling.sample_size) > n))
        fail("sample size must be in [1, n]");
}

void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "model") {
        auto model = parse_model(value);
        if (model != cfg.model) {
            auto fresh = SweepConfig::defaults(model);
            cfg.model = model;
            cfg.degree = fresh.degree;
            cfg.grid = fresh.grid;
        }
    } else if (key == "n") {
        cfg.n = to_int(key, value);
    } else if (key == "k" || key == "m") {
        cfg.degree = to_int(key, value);
    } else if (key == "grid") {
        cfg.grid.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.grid.push_back(to_double(key, trim(item)));
    } else if (key == "replicates") {
        cfg.replicates = static_cast<int>(to_int(key, value));
    } else if (key == "seed") {
        cfg.base_seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "sample") {
        auto size = to_int(key, value);
        if (size < 0) throw Error(ErrorKind::ConfigError, "sample must be >= 0");
        if (size == 0)
            cfg.sampling.sample_size.reset();
        else
            cfg.sampling.sample_size = static_cast<std::size_t>(size);
    } else if (key == "sample-seed") {
        cfg.sampling.seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "max-regenerations") {
        cfg.max_regenerations = static_cast<int>(to_int(key, value));
    } else {
        throw Error(ErrorKind::ConfigError, "unknown key '" + key + "'");
    }
}

SweepConfig parse_config(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> settings;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::ConfigError, "line " + std::to_string(line_no) + ": expected key=value");
        settings.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    // model first so that its defaults do not clobber explicit keys
    SweepConfig cfg = SweepConfig::defaults(Model::ws);
    for (const auto& [k, v] : settings)
        if (k == "model") apply_setting(cfg, k, v);
    for (const auto& [k, v] : settings)
        if (k != "model") apply_setting(cfg, k, v);
    return cfg;
}

SweepConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    return parse_config(in);
}

SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.model = to_string(cfg.model);
    result.config = cfg;
    result.started_at = utc_now();

    const auto reps = static_cast<std::uint64_t>(cfg.replicates);
    for (double parameter : cfg.grid) {
        Accumulator acc;
        for (int r = 0; r < cfg.replicates; ++r) {
            ReplicateRecord rec;
            rec.parameter = parameter;
            rec.replicate = r;
            Graph g;
            for (int attempt = 0;; ++attempt) {
                if (attempt > cfg.max_regenerations)
                    throw Error(ErrorKind::GenerationFailure,
                                std::string(result.model) + " parameter " + format_g(parameter) + " replicate " +
                                    std::to_string(r) + " stayed disconnected after " +
                                    std::to_string(cfg.max_regenerations) + " regenerations");
                rec.seed = cfg.base_seed + static_cast<std::uint64_t>(r) + reps * static_cast<std::uint64_t>(attempt);
                rec.regenerations = attempt;
                g = cfg.model == Model::ws ? watts_strogatz(cfg.n, cfg.degree, parameter, rec.seed)
                                           : holme_kim(cfg.n, cfg.degree, parameter, rec.seed);
                if (is_connected(g)) break;
            }
            accumulate_graph(g, cfg.sampling, acc, rec);
            result.replicates.push_back(rec);
        }
        acc.emit(result.model, parameter, result.rows);
    }
    result.finished_at = utc_now();
    return result;
}

SweepResult analyze_graph(const Graph& g, const StartSampling& sampling, const std::string& name) {
    SweepResult result;
    result.model = name;
    result.config.n = g.node_count();
    result.config.degree = 0;
    result.config.base_seed = 0;
    result.config.grid = {0.0};
    result.config.replicates = 1;
    result.config.sampling = sampling;
    result.started_at = utc_now();
    Accumulator acc;
    ReplicateRecord rec;
    accumulate_graph(g, sampling, acc, rec);
    result.replicates.push_back(rec);
    acc.emit(name, 0.0, result.rows);
    result.finished_at = utc_now();
    return result;
}

void emit_csv(const SweepResult& r, std::ostream& out) {
    const auto& c = r.config;
    out << "# model=" << r.model << " n=" << c.n << " degree=" << c.degree << " replicates=" << c.replicates
        << " base_seed=" << c.base_seed << " starts=" << sampling_text(c.sampling) << '\n';
    out << "# per-start series zero-padded to the longest generation axis before averaging\n";
    for (const auto& rec : r.replicates) {
        out << "# replicate parameter=" << format_g(rec.parameter) << " index=" << rec.replicate
            << " seed=" << rec.seed << " regenerations=" << rec.regenerations << " nodes=" << rec.nodes
            << " edges=" << rec.edges << " euler_total=" << rec.euler_total << " stoc_sum=" << rec.stoc_sum
            << " stoc_sum_mismatches=" << rec.stoc_sum_mismatches << '\n';
    }
    out << "model,parameter,generation,n_abs_mean,n_abs_std,r_rel_mean,r_rel_std,stoc_mean,stoc_std,support_count\n";
    for (const auto& row : r.rows) {
        out << row.model << ',' << format_g(row.parameter) << ',' << row.generation << ',' << format_g(row.n_abs_mean)
            << ',' << format_g(row.n_abs_std) << ',' << format_g(row.r_rel_mean) << ',' << format_g(row.r_rel_std)
            << ',' << format_g(row.stoc_mean) << ',' << format_g(row.stoc_std) << ',' << row.support_count << '\n';
    }
}

void emit_csv(const SweepResult& r, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    emit_csv(r, out);
    if (!out) throw Error(ErrorKind::IoError, "write failure on " + path.string());
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
    std::vector<SweepRow> rows;
    std::string line;
    bool header = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) f.push_back(item);
        if (f.size() != 10)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 10 fields");
        SweepRow row;
        row.model = f[0];
        row.parameter = to_double("parameter", f[1]);
        row.generation = static_cast<int>(to_int("generation", f[2]));
        row.n_abs_mean = to_double("n_abs_mean", f[3]);
        row.n_abs_std = to_double("n_abs_std", f[4]);
        row.r_rel_mean = to_double("r_rel_mean", f[5]);
        row.r_rel_std = to_double("r_rel_std", f[6]);
        row.stoc_mean = to_double("stoc_mean", f[7]);
        row.stoc_std = to_double("stoc_std", f[8]);
        row.support_count = static_cast<std::size_t>(to_int("support_count", f[9]));
        rows.push_back(row);
    }
    return rows;
}

std::vector<SummaryRow> summarize(const SweepResult& r) {
    std::vector<SummaryRow> out;
    for (const auto& row : r.rows) {
        if (out.empty() || out.back().parameter != row.parameter || out.back().model != row.model) {
            SummaryRow s;
            s.model = row.model;
            s.parameter = row.parameter;
            s.n_peak_value = -1.0;
            s.stoc_peak_value = -1.0;
            out.push_back(s);
        }
        auto& s = out.back();
        if (row.n_abs_mean > s.n_peak_value) {
            s.n_peak_value = row.n_abs_mean;
            s.n_peak_generation = row.generation;
        }
        if (row.stoc_mean > s.stoc_peak_value) {
            s.stoc_peak_value = row.stoc_mean;
            s.stoc_peak_generation = row.generation;
        }
    }
    for (auto& s : out) {
        double sum = 0.0;
        std::size_t count = 0;
        for (const auto& rec : r.replicates)
            if (rec.parameter == s.parameter) {
                sum += static_cast<double>(rec.euler_total);
                ++count;
            }
        s.euler_total_mean = count ? sum / static_cast<double>(count) : 0.0;
    }
    return out;
}

} // namespace stocnet
