#include "stocnet/census.hpp"
#include "stocnet/decomposition.hpp"
#include "stocnet/generators.hpp"
#include "stocnet/suite.hpp"
#include "stocnet/verification.hpp"

#include <string>

namespace stocnet {

namespace {

template <class Make>
Graph connected(Make make, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = make(seed + 7919 * attempt);
        if (is_connected(g)) return g;
    }
}

bool is_regular(const Graph& g) {
    for (NodeId v = 1; v < g.node_count(); ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return g.node_count() > 0;
}

} // namespace

std::vector<CorpusGraph> lattice_corpus() {
    std::vector<CorpusGraph> out;
    out.push_back({"ring(9)", ring(9)});
    out.push_back({"ring(10)", ring(10)});
    out.push_back({"ring(21)", ring(21)});
    out.push_back({"extended_ring(20,2)", extended_ring(20, 2)});
    out.push_back({"extended_ring(24,2)", extended_ring(24, 2)});
    out.push_back({"extended_ring(30,3)", extended_ring(30, 3)});
    out.push_back({"triangular(6x6)", triangular_lattice(6, 6)});
    out.push_back({"square(6x6)", square_lattice(6, 6, false)});
    out.push_back({"torus(6x6)", square_lattice(6, 6, true)});
    out.push_back({"torus(10x10)", square_lattice(10, 10, true)});
    out.push_back({"torus(5x8)", square_lattice(5, 8, true)});
    return out;
}

std::vector<CorpusGraph> random_corpus(std::uint64_t seed, int per_family) {
    std::vector<CorpusGraph> out;
    for (int i = 0; i < per_family; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        const std::int64_t n = 30 + (i * 37) % 171;
        const std::int64_t edges = n * (2 + i % 3);
        out.push_back({"erdos_renyi(" + std::to_string(n) + "," + std::to_string(edges) + ",seed=" + std::to_string(s) + ")",
                       connected([&](std::uint64_t x) { return erdos_renyi(n, edges, x); }, s)});
        const double p = 1.0 / static_cast<double>(1 << (i % 8));
        const std::int64_t k = i % 2 == 0 ? 4 : 6;
        out.push_back({"watts_strogatz(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(p) +
                           ",seed=" + std::to_string(s) + ")",
                       connected([&](std::uint64_t x) { return watts_strogatz(n, k, p, x); }, s)});
        const double q = (i % 11) / 10.0;
        const std::int64_t m = 1 + i % 3;
        out.push_back({"holme_kim(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(q) +
                           ",seed=" + std::to_string(s) + ")",
                       holme_kim(n, m, q, s)});
    }
    return out;
}

std::vector<CheckResult> verify_graph(const CorpusGraph& item, std::uint64_t seed) {
    const Graph& g = item.graph;
    const bool regular = is_regular(g);

    CheckResult recursion{item.name, "recursion", true, ""};
    CheckResult euler{item.name, "euler_total", true, ""};
    CheckResult difference{item.name, "difference_method", true, ""};
    CheckResult regular_rec{item.name, "regular_recursion", true, ""};
    CheckResult closed{item.name, "closed_form", true, ""};
    CheckResult tie{item.name, "tie_break_invariance", true, ""};

    auto fail = [](CheckResult& r, NodeId start, const std::string& what) {
        if (r.passed) r.detail = "start " + std::to_string(start) + ": " + what;
        r.passed = false;
    };

    for (NodeId start = 0; start < g.node_count(); ++start) {
        auto d = decompose(g, start);
        auto c = census(g, d);

        auto rec = recursion_report(g, d, c);
        if (!rec.exact()) fail(recursion, start, "max |residual| " + std::to_string(rec.max_abs_residual));

        const auto expected = euler_total(g, start);
        if (c.total != expected || cumulative_stoc(c, d.last_generation() + 1) != expected)
            fail(euler, start, "census " + std::to_string(c.total) + " vs 1+E-N " + std::to_string(expected));

        if (stoc_per_generation_by_difference(g, d) != c.per_gen_total)
            fail(difference, start, "difference series differs from census");

        if (regular) {
            auto r5 = regular_recursion_report(g, d, c);
            if (!r5.exact()) fail(regular_rec, start, "max |residual| " + std::to_string(r5.max_abs_residual));
            auto r6 = closed_form_report(g, d, c);
            if (!r6.exact()) fail(closed, start, "max |residual| " + std::to_string(r6.max_abs_residual));
            const int k = g.degree(0);
            for (int m = 1; m <= d.last_generation(); ++m)
                if (iterated_regular_index(k, c, m) != closed_form_index(k, c, m))
                    fail(closed, start, "iterated recursion differs at generation " + std::to_string(m));
        }

        if (start < 5) {
            auto t = tie_break_invariance_check(g, start, 5, seed);
            if (!t.invariant()) fail(tie, start, t.violations.front());
        }
    }

    std::vector<CheckResult> out{recursion, euler, difference, tie};
    if (regular) {
        out.push_back(regular_rec);
        out.push_back(closed);
    }
    return out;
}

} // namespace stocnet
