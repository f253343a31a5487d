#include "stocnet/census.hpp"

#include "stocnet/error.hpp"

#include "profile.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace stocnet {

namespace {

std::size_t series_length(const GenerationDecomposition& d) {
    int top = 0;
    for (int eg : d.edge_gen) top = std::max(top, eg);
    return static_cast<std::size_t>(top) + 1;
}

} // namespace

std::int64_t StocCensus::count(int generation, int nodes) const {
    auto it = counts.find({generation, nodes});
    return it == counts.end() ? 0 : it->second;
}

std::int64_t StocCensus::odd_sum(int generation) const {
    std::int64_t sum = 0;
    for (auto it = counts.lower_bound({generation, 0}); it != counts.end() && it->first.first == generation; ++it)
        if (it->first.second % 2 == 1) sum += it->second;
    return sum;
}

std::int64_t StocCensus::even_sum(int generation) const {
    std::int64_t sum = 0;
    for (auto it = counts.lower_bound({generation, 0}); it != counts.end() && it->first.first == generation; ++it)
        if (it->first.second % 2 == 0) sum += it->second;
    return sum;
}

StocCensus census(const Graph& g, const GenerationDecomposition& d) {
    check_derived_from(g, d);

    StocCensus c;
    c.start = d.start;
    c.graph_fingerprint = d.graph_fingerprint;
    c.per_gen_total.assign(series_length(d), 0);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (d.edge_class[e] != EdgeClass::secondary) continue;
        NodeId a = g.edge(e).u;
        NodeId b = g.edge(e).v;
        const int gen_a = d.node_gen[a];
        const int gen_b = d.node_gen[b];
        if (gen_a < gen_b) std::swap(a, b);
        // Lift the deeper end to the other's depth, then climb both together.
        int depth = std::max(gen_a, gen_b);
        const int shallow = std::min(gen_a, gen_b);
        while (depth > shallow) {
            a = d.parent[a];
            --depth;
        }
        while (a != b) {
            a = d.parent[a];
            b = d.parent[b];
            --depth;
        }
        const int nodes = gen_a + gen_b - 2 * depth + 1;
        const int generation = d.edge_gen[e];
        assert((nodes % 2 == 1) == (gen_a == gen_b));
        assert(nodes >= 3 && nodes <= 2 * generation);

        ++c.counts[{generation, nodes}];
        ++c.per_gen_total[generation];
        ++c.total;
    }

    c.cumulative.resize(c.per_gen_total.size());
    std::int64_t running = 0;
    for (std::size_t m = 0; m < c.per_gen_total.size(); ++m) c.cumulative[m] = running += c.per_gen_total[m];
    return c;
}

std::int64_t euler_total(const Graph& g, NodeId component_of) {
    auto nodes = connected_component(g, component_of);
    std::int64_t degree_sum = 0;
    for (NodeId v : nodes) degree_sum += g.degree(v);
    return 1 + degree_sum / 2 - static_cast<std::int64_t>(nodes.size());
}

std::int64_t cumulative_stoc(const StocCensus& c, int generation) {
    if (generation < 0) throw Error(ErrorKind::BadGeneration, "generation " + std::to_string(generation) + " < 0");
    if (c.cumulative.empty()) return 0;
    auto idx = std::min(static_cast<std::size_t>(generation), c.cumulative.size() - 1);
    return c.cumulative[idx];
}

std::vector<std::int64_t> stoc_per_generation_by_difference(const Graph& g, const GenerationDecomposition& d) {
    check_derived_from(g, d);
    std::vector<std::int64_t> nodes_at(d.level_sets.size());
    for (std::size_t m = 0; m < d.level_sets.size(); ++m) nodes_at[m] = static_cast<std::int64_t>(d.level_sets[m].size());
    std::vector<std::int64_t> edges_at(series_length(d), 0);
    for (int eg : d.edge_gen)
        if (eg > 0) ++edges_at[eg];
    return detail::stoc_by_difference(nodes_at, edges_at);
}

} // namespace stocnet
