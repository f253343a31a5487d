#include "stocnet/verification.hpp"

#include "stocnet/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace stocnet {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "closed form exceeds 64-bit range");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "closed form exceeds 64-bit range");
    return r;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

void check_census(const Graph& g, const GenerationDecomposition& d, const StocCensus& c) {
    check_derived_from(g, d);
    if (c.graph_fingerprint != g.fingerprint() || c.start != d.start)
        throw Error(ErrorKind::MismatchedInputs, "census was not computed from this decomposition");
}

void finish(ResidualReport& r) {
    for (auto x : r.residuals) r.max_abs_residual = std::max(r.max_abs_residual, x < 0 ? -x : x);
}

std::int64_t level_size(const GenerationDecomposition& d, int generation) {
    return generation <= d.last_generation() ? static_cast<std::int64_t>(d.level_sets[generation].size()) : 0;
}

} // namespace

const char* to_string(Relation r) noexcept {
    switch (r) {
    case Relation::recursion: return "recursion";
    case Relation::regular_recursion: return "regular_recursion";
    case Relation::closed_form: return "closed_form";
    }
    return "unknown";
}

std::int64_t recursion_correction(const StocCensus& c, int generation) {
    return 2 * c.odd_sum(generation) + c.even_sum(generation) + c.even_sum(generation - 1);
}

std::int64_t recursion_residual(const Graph& g, const GenerationDecomposition& d, const StocCensus& c, int generation) {
    check_census(g, d, c);
    // L+1 is the dummy generation holding only intra-level edges of generation L
    if (generation < 2 || generation > d.last_generation() + 1)
        throw Error(ErrorKind::BadGeneration, "generation " + std::to_string(generation) + " outside [2, " +
                                                  std::to_string(d.last_generation() + 1) + "]");
    std::int64_t tree_term = 0;
    for (NodeId v : d.level_sets[generation - 1]) tree_term += g.degree(v) - 1;
    return level_size(d, generation) - (tree_term - recursion_correction(c, generation));
}

ResidualReport recursion_report(const Graph& g, const GenerationDecomposition& d, const StocCensus& c) {
    ResidualReport r{d.start, Relation::recursion, 2, {}, 0};
    for (int m = 2; m <= d.last_generation() + 1; ++m) r.residuals.push_back(recursion_residual(g, d, c, m));
    finish(r);
    return r;
}

int regular_degree(const Graph& g) {
    if (g.node_count() == 0) throw Error(ErrorKind::NotRegular, "empty graph");
    const int k = g.degree(0);
    for (NodeId v = 1; v < g.node_count(); ++v)
        if (g.degree(v) != k)
            throw Error(ErrorKind::NotRegular, "node " + std::to_string(g.label(v)) + " has degree " +
                                                   std::to_string(g.degree(v)) + ", node " +
                                                   std::to_string(g.label(0)) + " has " + std::to_string(k));
    return k;
}

std::int64_t closed_form_index(int k, const StocCensus& c, int generation) {
    const int M = generation;
    if (M < 1) throw Error(ErrorKind::BadGeneration, "closed form needs generation >= 1");
    std::int64_t n = checked_mul(k, checked_pow(k - 1, M - 1));
    for (int j = 2; j <= M; ++j) {
        for (int i = j; i <= M; ++i) n = checked_sub(n, checked_mul(2 * checked_pow(k - 1, M - i), c.count(i, 2 * j - 1)));
        for (int i = j; i <= M - 1; ++i)
            n = checked_sub(n, checked_mul(checked_mul(k, checked_pow(k - 1, M - 1 - i)), c.count(i, 2 * j)));
        n = checked_sub(n, c.count(M, 2 * j));
    }
    return n;
}

std::int64_t closed_form_index(const Graph& g, const StocCensus& c, int generation) {
    if (c.graph_fingerprint != g.fingerprint()) throw Error(ErrorKind::MismatchedInputs, "census is for another graph");
    return closed_form_index(regular_degree(g), c, generation);
}

std::int64_t iterated_regular_index(int k, const StocCensus& c, int generation) {
    if (generation < 1) throw Error(ErrorKind::BadGeneration, "recursion needs generation >= 1");
    std::int64_t n = k;
    for (int m = 2; m <= generation; ++m) n = checked_sub(checked_mul(k - 1, n), recursion_correction(c, m));
    return n;
}

ResidualReport closed_form_report(const Graph& g, const GenerationDecomposition& d, const StocCensus& c) {
    check_census(g, d, c);
    const int k = regular_degree(g);
    ResidualReport r{d.start, Relation::closed_form, 1, {}, 0};
    for (int m = 1; m <= d.last_generation() + 1; ++m) r.residuals.push_back(level_size(d, m) - closed_form_index(k, c, m));
    finish(r);
    return r;
}

ResidualReport regular_recursion_report(const Graph& g, const GenerationDecomposition& d, const StocCensus& c) {
    check_census(g, d, c);
    const int k = regular_degree(g);
    ResidualReport r{d.start, Relation::regular_recursion, 2, {}, 0};
    for (int m = 2; m <= d.last_generation() + 1; ++m)
        r.residuals.push_back(level_size(d, m) - ((k - 1) * level_size(d, m - 1) - recursion_correction(c, m)));
    finish(r);
    return r;
}

TieBreakReport tie_break_invariance_check(const Graph& g, NodeId start, int trials, std::uint64_t seed) {
    if (trials < 2) throw Error(ErrorKind::BadParameter, "tie-break check needs at least 2 trials");
    TieBreakReport report;
    report.start = start;
    report.trials = trials;

    std::vector<std::int64_t> base_totals;
    std::vector<std::int64_t> base_corrections;
    for (int t = 0; t < trials; ++t) {
        const auto trial_seed = seed + static_cast<std::uint64_t>(t);
        auto d = decompose(g, start, TieBreak::random(trial_seed));
        auto c = census(g, d);
        std::vector<std::int64_t> corrections;
        for (int m = 2; m < static_cast<int>(c.per_gen_total.size()); ++m) corrections.push_back(recursion_correction(c, m));
        if (t == 0) {
            base_totals = c.per_gen_total;
            base_corrections = std::move(corrections);
            continue;
        }
        if (c.per_gen_total != base_totals) {
            report.totals_invariant = false;
            report.violations.push_back("seed " + std::to_string(trial_seed) + ": secondary-edge totals differ");
        }
        if (corrections != base_corrections) {
            report.correction_invariant = false;
            report.violations.push_back("seed " + std::to_string(trial_seed) + ": recursion correction differs");
        }
    }
    return report;
}

} // namespace stocnet
