#pragma once

#include "stocnet/decomposition.hpp"
#include "stocnet/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace stocnet {

// Which start nodes an averaged quantity runs over.
struct StartSampling {
    std::optional<std::size_t> sample_size;  // nullopt: every node
    std::uint64_t seed = 0;

    static StartSampling all() { return {}; }
    static StartSampling sample(std::size_t size, std::uint64_t seed) { return {size, seed}; }
};

// Selected starts, ascending.
std::vector<NodeId> select_starts(const Graph& g, const StartSampling& sampling);

enum class IndexKind { absolute, relative };
enum class IndexScope { local, averaged };

struct IndexSeries {
    IndexKind kind = IndexKind::absolute;
    IndexScope scope = IndexScope::local;
    std::optional<NodeId> start;
    std::vector<double> values;
    // Averaged scope only: starts contributing at each generation and their
    // population standard deviation.
    std::vector<std::size_t> support_counts;
    std::vector<double> dispersion;
};

// N_M(start) = size of generation M, for M = 0..L.
IndexSeries local_absolute_index(const GenerationDecomposition& d);

// R_M(start) = N_{M+1} / N_M, for M = 0..L-1.
IndexSeries local_relative_index(const GenerationDecomposition& d);

/// Mean of N_M(v) over the selected starts. A start whose eccentricity is
/// below M contributes 0, so every start supports every generation.
IndexSeries absolute_index(const Graph& g, const StartSampling& starts = StartSampling::all());

/// Mean of R_M(v) over the starts for which generation M+1 exists.
IndexSeries relative_index(const Graph& g, const StartSampling& starts = StartSampling::all());

// Both averages from one pass over the starts.
struct AveragedIndices {
    IndexSeries absolute;
    IndexSeries relative;
};
AveragedIndices averaged_indices(const Graph& g, const StartSampling& starts = StartSampling::all());

} // namespace stocnet
