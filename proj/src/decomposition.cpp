#include "stocnet/decomposition.hpp"

#include "stocnet/error.hpp"
#include "stocnet/rng.hpp"

#include <algorithm>
#include <string>

namespace stocnet {

std::size_t GenerationDecomposition::reachable_count() const noexcept {
    std::size_t total = 0;
    for (const auto& level : level_sets) total += level.size();
    return total;
}

GenerationDecomposition decompose(const Graph& g, NodeId start, TieBreak tie_break) {
    if (!g.contains(start)) throw Error(ErrorKind::IdOutOfRange, "start node " + std::to_string(start));

    const auto n = static_cast<std::size_t>(g.node_count());
    GenerationDecomposition d;
    d.start = start;
    d.graph_fingerprint = g.fingerprint();
    d.node_gen.assign(n, unreached);
    d.parent.assign(n, no_parent);
    d.edge_gen.assign(static_cast<std::size_t>(g.edge_count()), 0);
    d.edge_class.assign(static_cast<std::size_t>(g.edge_count()), EdgeClass::unreached);

    d.node_gen[start] = 0;
    d.level_sets.push_back({start});
    for (int gen = 0;; ++gen) {
        std::vector<NodeId> next;
        for (NodeId v : d.level_sets[gen])
            for (NodeId w : g.neighbors(v))
                if (d.node_gen[w] == unreached) {
                    d.node_gen[w] = gen + 1;
                    next.push_back(w);
                }
        if (next.empty()) break;
        d.level_sets.push_back(std::move(next));
    }

    Rng rng(tie_break.seed);
    std::vector<EdgeId> choices;
    for (std::size_t gen = 1; gen < d.level_sets.size(); ++gen) {
        for (NodeId v : d.level_sets[gen]) {
            choices.clear();
            auto nbrs = g.neighbors(v);
            auto inc = g.incident_edges(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                if (d.node_gen[nbrs[i]] == static_cast<int>(gen) - 1) {
                    choices.push_back(inc[i]);
                    if (tie_break.mode == TieBreak::Mode::lowest_id) break;
                }
            EdgeId chosen = choices.size() == 1 ? choices[0] : choices[rng.below(choices.size())];
            const Edge& e = g.edge(chosen);
            d.parent[v] = e.u == v ? e.v : e.u;
            d.edge_class[chosen] = EdgeClass::primary;
        }
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        int a = d.node_gen[edge.u];
        if (a == unreached) continue;
        int b = d.node_gen[edge.v];
        d.edge_gen[e] = std::min(a, b) + 1;
        if (d.edge_class[e] != EdgeClass::primary) d.edge_class[e] = EdgeClass::secondary;
    }
    return d;
}

int eccentricity(const GenerationDecomposition& d) noexcept { return d.last_generation(); }

void check_derived_from(const Graph& g, const GenerationDecomposition& d) {
    if (d.graph_fingerprint != g.fingerprint() || d.node_gen.size() != static_cast<std::size_t>(g.node_count()) ||
        d.edge_gen.size() != static_cast<std::size_t>(g.edge_count()))
        throw Error(ErrorKind::MismatchedInputs, "decomposition was not computed from this graph");
}

} // namespace stocnet
