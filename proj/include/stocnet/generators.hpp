#pragma once

#include "stocnet/graph.hpp"

#include <cstdint>
#include <string>

namespace stocnet {

enum class Family {
    ring,
    extended_ring,
    triangular_lattice,
    square_lattice,
    square_torus,
    watts_strogatz,
    holme_kim,
    barabasi_albert,
    erdos_renyi,
};

const char* to_string(Family family) noexcept;

// Parameters for one generated graph. Only the fields relevant to `family`
// are read: n (rings, random models), rows/cols (lattices), half_width (r),
// base_degree (k), edges_per_node (m), rewire (p), triad (q), edge_count (ER).
struct GeneratorSpec {
    Family family = Family::ring;
    std::int64_t n = 0;
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::int64_t half_width = 1;
    std::int64_t base_degree = 2;
    std::int64_t edges_per_node = 1;
    double rewire = 0.0;
    double triad = 0.0;
    std::int64_t edge_count = 0;
    std::uint64_t seed = 0;
};

Graph generate(const GeneratorSpec& spec);

Graph ring(std::int64_t n);

// Node i joined to i±1, ..., i±r (mod n). Requires n > 2r >= 2.
Graph extended_ring(std::int64_t n, std::int64_t r);

// Node (row, col) has id row*cols + col.
Graph square_lattice(std::int64_t rows, std::int64_t cols, bool torus);

// Square grid plus one diagonal per cell, alternating by row parity: even rows
// link down to (r+1, c-1) and (r+1, c), odd rows to (r+1, c) and (r+1, c+1).
// Interior nodes have degree 6.
Graph triangular_lattice(std::int64_t rows, std::int64_t cols);

/// Watts-Strogatz small world: extended_ring(n, k/2), then each lattice edge
/// (i, i+d), visited for d = 1..k/2 and i = 0..n-1, has its far endpoint moved
/// with probability p to a uniform node that is neither i nor a current
/// neighbor of i. Edges of a node adjacent to everything are left alone.
/// The edge count is n*k/2 for every p.
Graph watts_strogatz(std::int64_t n, std::int64_t k, double p, std::uint64_t seed);

/// Holme-Kim growth: clique on m+1 nodes, then each new node adds m edges.
/// The first goes by preferential attachment; each later one, with
/// probability q, closes a triangle through a random neighbor of the previous
/// target (falling back to preferential attachment if none is free) and
/// otherwise also goes by preferential attachment.
Graph holme_kim(std::int64_t n, std::int64_t m, double q, std::uint64_t seed);

// holme_kim with q = 0.
Graph barabasi_albert(std::int64_t n, std::int64_t m, std::uint64_t seed);

// Uniform over simple graphs on n nodes with exactly edge_count edges.
Graph erdos_renyi(std::int64_t n, std::int64_t edge_count, std::uint64_t seed);

} // namespace stocnet
