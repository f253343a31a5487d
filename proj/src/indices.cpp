#include "stocnet/indices.hpp"

#include "stocnet/error.hpp"
#include "stocnet/rng.hpp"

#include "parallel.hpp"
#include "profile.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace stocnet {

namespace {

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t count = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }
    double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
    double stddev() const {
        if (count == 0) return 0.0;
        const double m = mean();
        return std::sqrt(std::max(0.0, sum_sq / static_cast<double>(count) - m * m));
    }
};

std::vector<std::vector<std::int64_t>> level_sizes(const Graph& g, const std::vector<NodeId>& starts) {
    std::vector<std::vector<std::int64_t>> out(starts.size());
    detail::parallel_for(starts.size(), [&](std::size_t i) {
        thread_local detail::ProfileScratch scratch;
        out[i] = scratch.run(g, starts[i]).nodes_at;
    });
    return out;
}

} // namespace

std::vector<NodeId> select_starts(const Graph& g, const StartSampling& sampling) {
    const auto n = static_cast<std::size_t>(g.node_count());
    if (!sampling.sample_size) {
        if (n == 0) throw Error(ErrorKind::EmptySample, "graph has no nodes");
        std::vector<NodeId> all(n);
        std::iota(all.begin(), all.end(), NodeId{0});
        return all;
    }
    const std::size_t size = *sampling.sample_size;
    if (size == 0) throw Error(ErrorKind::EmptySample, "sample size is 0");
    if (size > n)
        throw Error(ErrorKind::BadParameter,
                    "sample size " + std::to_string(size) + " exceeds node count " + std::to_string(n));
    Rng rng(sampling.seed);
    auto picked = sample_without_replacement(rng, n, size);
    return {picked.begin(), picked.end()};
}

IndexSeries local_absolute_index(const GenerationDecomposition& d) {
    IndexSeries s{IndexKind::absolute, IndexScope::local, d.start, {}, {}, {}};
    for (const auto& level : d.level_sets) s.values.push_back(static_cast<double>(level.size()));
    return s;
}

IndexSeries local_relative_index(const GenerationDecomposition& d) {
    IndexSeries s{IndexKind::relative, IndexScope::local, d.start, {}, {}, {}};
    for (std::size_t m = 0; m + 1 < d.level_sets.size(); ++m)
        s.values.push_back(static_cast<double>(d.level_sets[m + 1].size()) /
                           static_cast<double>(d.level_sets[m].size()));
    return s;
}

AveragedIndices averaged_indices(const Graph& g, const StartSampling& sampling) {
    const auto starts = select_starts(g, sampling);
    const auto sizes = level_sizes(g, starts);

    std::size_t depth = 0;
    for (const auto& s : sizes) depth = std::max(depth, s.size());

    std::vector<Moments> absolute(depth);
    std::vector<Moments> relative(depth > 0 ? depth - 1 : 0);
    for (const auto& s : sizes) {
        for (std::size_t m = 0; m < depth; ++m) absolute[m].add(m < s.size() ? static_cast<double>(s[m]) : 0.0);
        for (std::size_t m = 0; m + 1 < s.size(); ++m)
            relative[m].add(static_cast<double>(s[m + 1]) / static_cast<double>(s[m]));
    }

    AveragedIndices out;
    out.absolute.kind = IndexKind::absolute;
    out.relative.kind = IndexKind::relative;
    for (auto* series : {&out.absolute, &out.relative}) series->scope = IndexScope::averaged;
    for (const auto& mo : absolute) {
        out.absolute.values.push_back(mo.mean());
        out.absolute.dispersion.push_back(mo.stddev());
        out.absolute.support_counts.push_back(mo.count);
    }
    for (const auto& mo : relative) {
        out.relative.values.push_back(mo.mean());
        out.relative.dispersion.push_back(mo.stddev());
        out.relative.support_counts.push_back(mo.count);
    }
    return out;
}

IndexSeries absolute_index(const Graph& g, const StartSampling& starts) { return averaged_indices(g, starts).absolute; }

IndexSeries relative_index(const Graph& g, const StartSampling& starts) { return averaged_indices(g, starts).relative; }

} // namespace stocnet
