#pragma once

#include "stocnet/graph.hpp"

#include <cstdint>
#include <vector>

namespace stocnet::detail {

// Per-generation node and edge counts from one start, without the parent and
// per-edge arrays of a full decomposition. Scratch buffers are reused across
// calls on the same thread.
struct GenerationProfile {
    std::vector<std::int64_t> nodes_at;  // N_M, M = 0..L
    std::vector<std::int64_t> edges_at;  // edges with edge_gen M, M = 0..L+1
};

class ProfileScratch {
public:
    const GenerationProfile& run(const Graph& g, NodeId start);

private:
    std::vector<int> gen_;
    std::vector<NodeId> queue_;
    GenerationProfile profile_;
};

// Cycle counts per generation by differencing 1 + E(<=M) - N(<=M); the
// result is trimmed to end at the last non-empty edge generation.
std::vector<std::int64_t> stoc_by_difference(const std::vector<std::int64_t>& nodes_at,
                                             const std::vector<std::int64_t>& edges_at);

} // namespace stocnet::detail
