#pragma once

#include "stocnet/decomposition.hpp"
#include "stocnet/graph.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace stocnet {

// Cycles with exactly one secondary edge, one per secondary edge: the edge
// plus the two primary-tree paths to the lowest common ancestor of its ends.
// A cycle belongs to the generation of its secondary edge.
struct StocCensus {
    NodeId start = 0;
    // (generation M, cycle node count j) -> number of cycles; zero entries omitted.
    std::map<std::pair<int, int>, std::int64_t> counts;
    // Indexed by generation 0..(largest edge generation).
    std::vector<std::int64_t> per_gen_total;
    std::vector<std::int64_t> cumulative;
    std::int64_t total = 0;
    std::uint64_t graph_fingerprint = 0;

    std::int64_t count(int generation, int nodes) const;
    // Sum of counts at `generation` over odd (resp. even) cycle sizes.
    std::int64_t odd_sum(int generation) const;
    std::int64_t even_sum(int generation) const;
};

StocCensus census(const Graph& g, const GenerationDecomposition& d);

/// 1 + edges - nodes over the component containing `component_of`.
std::int64_t euler_total(const Graph& g, NodeId component_of);

/// Cycles whose generation is at most `generation`; past the last edge
/// generation this is the census total.
std::int64_t cumulative_stoc(const StocCensus& c, int generation);

/// Per-generation cycle counts from 1 + (edges with edge_gen <= M) - (nodes
/// with node_gen <= M), differenced between adjacent M. Uses no cycle
/// enumeration; same indexing as StocCensus::per_gen_total.
std::vector<std::int64_t> stoc_per_generation_by_difference(const Graph& g, const GenerationDecomposition& d);

} // namespace stocnet
