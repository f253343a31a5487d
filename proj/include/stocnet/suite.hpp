#pragma once

#include "stocnet/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stocnet {

struct CorpusGraph {
    std::string name;
    Graph graph;
};

// Rings, extended rings, triangular, square and toroidal lattices.
std::vector<CorpusGraph> lattice_corpus();

// Connected ER, WS and HK graphs of 30..200 nodes, derived from seed.
std::vector<CorpusGraph> random_corpus(std::uint64_t seed, int per_family);

struct CheckResult {
    std::string graph;
    std::string check;
    bool passed = false;
    std::string detail;
};

/// Runs every exact identity on one graph from every start: the generation
/// recursion, the cycle total against 1 + E - N, the difference method
/// against the direct census, tie-break invariance (a few starts), and on
/// regular graphs the regular recursion and the closed form.
std::vector<CheckResult> verify_graph(const CorpusGraph& item, std::uint64_t seed = 1);

} // namespace stocnet
