#pragma once

#include "stocnet/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace stocnet {

inline constexpr int unreached = -1;
inline constexpr NodeId no_parent = -1;

enum class EdgeClass : std::uint8_t { unreached, primary, secondary };

// How the primary parent is picked when a node has several neighbors one
// generation closer to the start.
struct TieBreak {
    enum class Mode { lowest_id, seeded_random };
    Mode mode = Mode::lowest_id;
    std::uint64_t seed = 0;

    static TieBreak lowest_id() { return {}; }
    static TieBreak random(std::uint64_t seed) { return {Mode::seeded_random, seed}; }
};

/// BFS generations seen from one start node.
///
/// node_gen[v] is the hop distance from `start` (unreached if v lies in
/// another component). An edge whose endpoints sit at generations g and g or
/// g and g+1 has edge_gen g+1. Each non-start reachable node owns exactly one
/// primary edge, to its parent in the previous generation; the primary edges
/// form a BFS spanning tree and every other reachable edge is secondary.
struct GenerationDecomposition {
    NodeId start = 0;
    std::vector<int> node_gen;
    std::vector<NodeId> parent;
    std::vector<int> edge_gen;  // 0 for edges outside the component
    std::vector<EdgeClass> edge_class;
    std::vector<std::vector<NodeId>> level_sets;
    std::uint64_t graph_fingerprint = 0;

    // Last non-empty generation L.
    int last_generation() const noexcept { return static_cast<int>(level_sets.size()) - 1; }
    std::size_t reachable_count() const noexcept;
};

GenerationDecomposition decompose(const Graph& g, NodeId start, TieBreak tie_break = TieBreak::lowest_id());

// Returns L for the decomposition.
int eccentricity(const GenerationDecomposition& d) noexcept;

// Throws MismatchedInputs unless d was computed from g.
void check_derived_from(const Graph& g, const GenerationDecomposition& d);

} // namespace stocnet
