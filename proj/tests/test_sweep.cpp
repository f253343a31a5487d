#include "doctest.h"

#include "stocnet/error.hpp"
#include "stocnet/generators.hpp"
#include "stocnet/sweep.hpp"

#include <cmath>
#include <sstream>

using namespace stocnet;

namespace {

SweepConfig small_ws() {
    SweepConfig cfg = SweepConfig::defaults(Model::ws);
    cfg.n = 60;
    cfg.degree = 6;
    cfg.grid = {0.0, 1.0};
    cfg.replicates = 2;
    cfg.base_seed = 3;
    return cfg;
}

std::string csv_of(const SweepResult& r) {
    std::ostringstream out;
    emit_csv(r, out);
    return out.str();
}

} // namespace

TEST_CASE("default grids") {
    auto ws = SweepConfig::defaults(Model::ws);
    REQUIRE(ws.grid.size() == 11);
    CHECK(ws.grid.front() == 1.0);
    CHECK(ws.grid.back() == std::ldexp(1.0, -10));
    CHECK(ws.degree == 6);
    CHECK(ws.n == 3000);
    CHECK(ws.replicates == 10);
    auto hk = SweepConfig::defaults(Model::hk);
    REQUIRE(hk.grid.size() == 11);
    CHECK(hk.grid.front() == 0.0);
    CHECK(hk.grid[3] == 0.3);
    CHECK(hk.grid.back() == 1.0);
    CHECK(hk.degree == 3);
}

TEST_CASE("small ws sweep satisfies the per-replicate cycle identity") {
    auto r = run_sweep(small_ws());
    REQUIRE(r.replicates.size() == 4);
    for (const auto& rec : r.replicates) {
        CHECK(rec.edges == 180);
        CHECK(rec.euler_total == 1 + rec.edges - rec.nodes);
        CHECK(rec.stoc_sum == rec.euler_total);
        CHECK(rec.stoc_sum_mismatches == 0);
    }
    // rows cover generations 0.. per parameter, in grid order
    CHECK(r.rows.front().parameter == 0.0);
    CHECK(r.rows.front().generation == 0);
    CHECK(r.rows.front().n_abs_mean == 1.0);
    CHECK(r.rows.back().parameter == 1.0);
    double stoc_total = 0.0;
    double n_total = 0.0;
    for (const auto& row : r.rows) {
        CHECK(std::isfinite(row.n_abs_mean));
        CHECK(row.n_abs_mean >= 0.0);
        CHECK(row.stoc_mean >= 0.0);
        CHECK(row.n_abs_std >= 0.0);
        if (row.parameter == 0.0) {
            stoc_total += row.stoc_mean;
            n_total += row.n_abs_mean;
        }
    }
    CHECK(stoc_total == doctest::Approx(121.0));
    CHECK(n_total == doctest::Approx(60.0));
}

TEST_CASE("p = 0 ring lattice from every start gives identical series") {
    auto cfg = small_ws();
    cfg.grid = {0.0};
    cfg.replicates = 1;
    auto r = run_sweep(cfg);
    for (const auto& row : r.rows) {
        CHECK(row.n_abs_std == 0.0);
        CHECK(row.stoc_std == 0.0);
    }
}

TEST_CASE("sweep is deterministic to the byte") {
    auto cfg = small_ws();
    cfg.model = Model::hk;
    cfg.degree = 3;
    cfg.grid = {0.0, 0.5};
    auto a = csv_of(run_sweep(cfg));
    auto b = csv_of(run_sweep(cfg));
    CHECK(a == b);
    cfg.base_seed = 4;
    CHECK(csv_of(run_sweep(cfg)) != a);
}

TEST_CASE("csv layout and round trip") {
    auto r = run_sweep(small_ws());
    auto text = csv_of(r);
    CHECK(text.find("model,parameter,generation,n_abs_mean,n_abs_std,r_rel_mean,r_rel_std,stoc_mean,stoc_std,support_count\n") !=
          std::string::npos);
    CHECK(text.rfind("# ", 0) == 0);
    std::istringstream in(text);
    auto rows = parse_sweep_csv(in);
    REQUIRE(rows.size() == r.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = r.rows[i];
        CHECK(a.model == b.model);
        CHECK(a.generation == b.generation);
        CHECK(a.support_count == b.support_count);
        for (auto [x, y] : {std::pair{a.parameter, b.parameter}, {a.n_abs_mean, b.n_abs_mean}, {a.n_abs_std, b.n_abs_std},
                            {a.r_rel_mean, b.r_rel_mean}, {a.r_rel_std, b.r_rel_std}, {a.stoc_mean, b.stoc_mean},
                            {a.stoc_std, b.stoc_std}})
            CHECK(x == doctest::Approx(y).epsilon(1e-5));
    }
}

TEST_CASE("analyze_graph on C6: one row per generation") {
    auto r = analyze_graph(ring(6), StartSampling::all(), "c6");
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[0].n_abs_mean == 1.0);
    CHECK(r.rows[1].n_abs_mean == 2.0);
    CHECK(r.rows[3].n_abs_mean == 1.0);
    CHECK(r.rows[3].stoc_mean == 1.0);
    auto s = summarize(r);
    REQUIRE(s.size() == 1);
    CHECK(s[0].n_peak_generation == 1);
    CHECK(s[0].n_peak_value == 2.0);
    CHECK(s[0].stoc_peak_generation == 3);
    CHECK(s[0].euler_total_mean == 1.0);
}

TEST_CASE("analyze_graph pads to the longest series") {
    std::vector<std::pair<Label, Label>> path{{0, 1}, {1, 2}, {2, 3}};
    auto r = analyze_graph(build_graph(path), StartSampling::all(), "p4");
    REQUIRE(r.rows.size() == 4);
    // only the two ends reach generation 3
    CHECK(r.rows[3].n_abs_mean == doctest::Approx(0.5));
    CHECK(r.rows[2].support_count == 2);
    CHECK(r.rows[3].support_count == 0);
}

TEST_CASE("config parsing") {
    std::istringstream in("# sweep\nmodel = hk\nn=500\nreplicates=3\ngrid=0, 0.5,1\nseed=9\nsample=100\nsample-seed=4\n");
    auto cfg = parse_config(in);
    CHECK(cfg.model == Model::hk);
    CHECK(cfg.degree == 3);
    CHECK(cfg.n == 500);
    CHECK(cfg.replicates == 3);
    CHECK(cfg.grid == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(cfg.base_seed == 9);
    REQUIRE(cfg.sampling.sample_size.has_value());
    CHECK(*cfg.sampling.sample_size == 100);
    CHECK(cfg.sampling.seed == 4);
    cfg.validate();

    // model keys apply before others regardless of order
    std::istringstream late("m=2\nmodel=hk\n");
    CHECK(parse_config(late).degree == 2);

    auto kind = [](const std::string& text) {
        std::istringstream s(text);
        try {
            parse_config(s).validate();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::IoError;
    };
    CHECK(kind("bogus=1\n") == ErrorKind::ConfigError);
    CHECK(kind("model=er\n") == ErrorKind::ConfigError);
    CHECK(kind("n=abc\n") == ErrorKind::ConfigError);
    CHECK(kind("no equals sign\n") == ErrorKind::ConfigError);
    CHECK(kind("grid=\n") == ErrorKind::ConfigError);
    CHECK(kind("replicates=0\n") == ErrorKind::ConfigError);
    CHECK(kind("k=5\n") == ErrorKind::ConfigError);
    CHECK(kind("grid=0.5,1.5\n") == ErrorKind::ConfigError);
}

TEST_CASE("empty grid never reaches the sweep") {
    auto cfg = small_ws();
    cfg.grid.clear();
    CHECK_THROWS_AS(run_sweep(cfg), Error);
}

TEST_CASE("disconnected graphs are regenerated with the next derived seed") {
    // n=12, k=2, p=1: almost always disconnected on the first draws
    SweepConfig cfg = SweepConfig::defaults(Model::ws);
    cfg.n = 12;
    cfg.degree = 2;
    cfg.grid = {1.0};
    cfg.replicates = 2;
    cfg.base_seed = 1;
    cfg.max_regenerations = 5000;
    auto r = run_sweep(cfg);
    for (const auto& rec : r.replicates) {
        CHECK(rec.seed == cfg.base_seed + static_cast<std::uint64_t>(rec.replicate) + 2u * static_cast<std::uint64_t>(rec.regenerations));
        CHECK(is_connected(watts_strogatz(12, 2, 1.0, rec.seed)));
        CHECK(rec.stoc_sum == rec.euler_total);
    }
    cfg.max_regenerations = 0;
    bool failed = false;
    try {
        // with no retries allowed, some seed among a handful must fail
        for (std::uint64_t s = 1; s < 50 && !failed; ++s) {
            cfg.base_seed = s;
            run_sweep(cfg);
        }
    } catch (const Error& e) {
        failed = e.kind() == ErrorKind::GenerationFailure;
    }
    CHECK(failed);
}

TEST_CASE("summarize picks the first peak per parameter") {
    SweepResult r;
    r.model = "x";
    for (int gen = 0; gen < 5; ++gen) {
        SweepRow row;
        row.model = "x";
        row.parameter = 0.5;
        row.generation = gen;
        row.n_abs_mean = std::vector<double>{1, 4, 4, 2, 0}[gen];
        row.stoc_mean = std::vector<double>{0, 1, 3, 3, 1}[gen];
        r.rows.push_back(row);
    }
    auto s = summarize(r);
    REQUIRE(s.size() == 1);
    CHECK(s[0].n_peak_generation == 1);
    CHECK(s[0].n_peak_value == 4.0);
    CHECK(s[0].stoc_peak_generation == 2);
}
