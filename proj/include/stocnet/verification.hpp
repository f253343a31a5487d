#pragma once

#include "stocnet/census.hpp"
#include "stocnet/decomposition.hpp"
#include "stocnet/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stocnet {

enum class Relation { recursion, regular_recursion, closed_form };

const char* to_string(Relation r) noexcept;

// Left side minus right side of an index/cycle relation, per generation.
struct ResidualReport {
    NodeId start = 0;
    Relation relation = Relation::recursion;
    int first_generation = 0;
    std::vector<std::int64_t> residuals;  // residuals[i] is for first_generation + i
    std::int64_t max_abs_residual = 0;

    bool exact() const noexcept { return max_abs_residual == 0; }
};

/// N_M minus its prediction from the previous generation:
///   sum over generation-(M-1) nodes of (degree - 1)
///   - 2 * (odd cycles of generation M) - (even cycles of generation M)
///   - (even cycles of generation M-1).
/// Requires 2 <= M <= L+1, where L+1 is the empty dummy generation (N = 0).
std::int64_t recursion_residual(const Graph& g, const GenerationDecomposition& d, const StocCensus& c, int generation);

// The cycle correction terms of the recursion at M, which depend only on the
// graph: 2*odd(M) + even(M) + even(M-1).
std::int64_t recursion_correction(const StocCensus& c, int generation);

// Residuals for M = 2..L+1.
ResidualReport recursion_report(const Graph& g, const GenerationDecomposition& d, const StocCensus& c);

// Common degree, or NotRegular.
int regular_degree(const Graph& g);

/// N_M of a k-regular graph in closed form:
///   k (k-1)^(M-1) - sum_{j=2..M} [ 2 sum_{i=j..M} (k-1)^(M-i) C(2j-1, i)
///                                  + k sum_{i=j..M-1} (k-1)^(M-1-i) C(2j, i) + C(2j, M) ]
/// where C(s, i) counts generation-i cycles with s nodes. Valid for M >= 1.
std::int64_t closed_form_index(int k, const StocCensus& c, int generation);
std::int64_t closed_form_index(const Graph& g, const StocCensus& c, int generation);

/// The same quantity by stepping N_M = (k-1) N_{M-1} - corrections from N_1 = k.
std::int64_t iterated_regular_index(int k, const StocCensus& c, int generation);

// N_M - [(k-1) N_{M-1} - corrections] for M = 2..L+1 on a k-regular graph.
ResidualReport regular_recursion_report(const Graph& g, const GenerationDecomposition& d, const StocCensus& c);

// Closed form against the BFS level sizes for M = 1..L+1.
ResidualReport closed_form_report(const Graph& g, const GenerationDecomposition& d, const StocCensus& c);

struct TieBreakReport {
    NodeId start = 0;
    int trials = 0;
    bool totals_invariant = true;
    bool correction_invariant = true;
    std::vector<std::string> violations;

    bool invariant() const noexcept { return totals_invariant && correction_invariant; }
};

/// Decomposes from `start` under `trials` random tie-break seeds (seed,
/// seed+1, ...) and compares, generation by generation, the number of
/// secondary edges and the recursion correction term.
TieBreakReport tie_break_invariance_check(const Graph& g, NodeId start, int trials, std::uint64_t seed);

} // namespace stocnet
