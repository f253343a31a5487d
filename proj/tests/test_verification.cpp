#include "doctest.h"

#include "oracles.hpp"

#include "stocnet/error.hpp"
#include "stocnet/generators.hpp"
#include "stocnet/suite.hpp"
#include "stocnet/verification.hpp"

using namespace stocnet;

namespace {

Graph k4() {
    std::vector<std::pair<Label, Label>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return build_graph(pairs);
}

struct Analysis {
    GenerationDecomposition d;
    StocCensus c;
};

Analysis analyze(const Graph& g, NodeId s) {
    auto d = decompose(g, s);
    auto c = census(g, d);
    return {std::move(d), std::move(c)};
}

} // namespace

TEST_CASE("recursion on C4: 1 - (2 - 0 - 1 - 0) = 0") {
    auto g = ring(4);
    auto [d, c] = analyze(g, 0);
    // generation-1 nodes 1 and 3 each contribute degree-1 = 1
    CHECK(recursion_correction(c, 2) == 1);
    CHECK(recursion_residual(g, d, c, 2) == 0);
}

TEST_CASE("recursion on K4 at the dummy generation: 0 - (6 - 2*3 - 0 - 0) = 0") {
    auto g = k4();
    auto [d, c] = analyze(g, 0);
    CHECK(d.last_generation() == 1);
    CHECK(recursion_correction(c, 2) == 6);
    CHECK(recursion_residual(g, d, c, 2) == 0);
    CHECK_THROWS_AS(recursion_residual(g, d, c, 3), Error);
}

TEST_CASE("recursion residual is zero on trees") {
    auto tree = barabasi_albert(60, 1, 9);
    for (NodeId s = 0; s < tree.node_count(); s += 5) {
        auto [d, c] = analyze(tree, s);
        CHECK(c.counts.empty());
        CHECK(recursion_report(tree, d, c).exact());
    }
}

TEST_CASE("recursion residual errors") {
    auto g = ring(8);
    auto [d, c] = analyze(g, 0);
    CHECK_THROWS_AS(recursion_residual(g, d, c, 1), Error);
    CHECK_THROWS_AS(recursion_residual(g, d, c, d.last_generation() + 2), Error);
    try {
        recursion_residual(g, d, c, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadGeneration);
    }
    auto other = ring(9);
    CHECK_THROWS_AS(recursion_residual(other, d, c, 2), Error);
}

TEST_CASE("recursion holds on random graphs from every start") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (const auto& g : {erdos_renyi(60, 130, seed), watts_strogatz(80, 6, 0.3, seed), holme_kim(90, 2, 0.5, seed)}) {
            for (NodeId s = 0; s < g.node_count(); ++s) {
                auto [d, c] = analyze(g, s);
                auto r = recursion_report(g, d, c);
                CHECK(r.exact());
                CHECK(r.residuals.size() == static_cast<std::size_t>(d.last_generation()));
            }
        }
    }
}

TEST_CASE("closed form on rings") {
    auto g = ring(21);
    auto [d, c] = analyze(g, 0);
    for (int m = 1; m < 10; ++m) CHECK(closed_form_index(2, c, m) == 2);
    CHECK(closed_form_report(g, d, c).exact());
}

TEST_CASE("closed form at M = 1 is the degree") {
    for (const auto& g : {square_lattice(6, 6, true), extended_ring(24, 2), extended_ring(30, 3), k4()}) {
        auto [d, c] = analyze(g, 0);
        CHECK(closed_form_index(g, c, 1) == g.degree(0));
    }
}

TEST_CASE("closed form equals BFS level sizes on the 10x10 torus") {
    auto g = square_lattice(10, 10, true);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        auto [d, c] = analyze(g, s);
        for (int m = 1; m <= d.last_generation(); ++m) {
            CHECK(closed_form_index(4, c, m) == static_cast<std::int64_t>(d.level_sets[m].size()));
            CHECK(iterated_regular_index(4, c, m) == closed_form_index(4, c, m));
        }
        CHECK(regular_recursion_report(g, d, c).exact());
    }
}

TEST_CASE("closed form on small regular graphs") {
    // K_{4,4} and the cube are bipartite (even cycles only); Petersen has girth 5
    std::vector<std::pair<Label, Label>> k44;
    for (Label a = 0; a < 4; ++a)
        for (Label b = 4; b < 8; ++b) k44.emplace_back(a, b);
    std::vector<std::pair<Label, Label>> cube;
    for (Label v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit)
            if (v < (v ^ (1 << bit))) cube.emplace_back(v, v ^ (1 << bit));
    std::vector<std::pair<Label, Label>> petersen{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                 {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
    for (const auto& g : {build_graph(k44), build_graph(cube), build_graph(petersen)}) {
        for (NodeId s = 0; s < g.node_count(); ++s) {
            auto [d, c] = analyze(g, s);
            CHECK(closed_form_report(g, d, c).exact());
        }
    }
}

TEST_CASE("closed form rejects irregular graphs") {
    auto g = square_lattice(4, 4, false);
    auto [d, c] = analyze(g, 0);
    try {
        closed_form_index(g, c, 2);
        FAIL("expected NotRegular");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRegular);
    }
    CHECK_THROWS_AS(closed_form_report(g, d, c), Error);
}

TEST_CASE("tie-break invariance") {
    CHECK(tie_break_invariance_check(ring(4), 0, 4, 1).invariant());
    CHECK(tie_break_invariance_check(k4(), 0, 4, 1).invariant());
    auto g = erdos_renyi(200, 600, 3);
    for (NodeId s : {0, 50, 199}) {
        auto r = tie_break_invariance_check(g, s, 10, 100);
        CHECK(r.invariant());
        CHECK(r.violations.empty());
    }
    CHECK_THROWS_AS(tie_break_invariance_check(g, 0, 1, 1), Error);
}

TEST_CASE("suite runner passes on the lattice corpus and a small random corpus") {
    for (const auto& item : lattice_corpus())
        for (const auto& r : verify_graph(item)) {
            INFO(r.graph << " " << r.check << " " << r.detail);
            CHECK(r.passed);
        }
    for (const auto& item : random_corpus(5, 3))
        for (const auto& r : verify_graph(item)) {
            INFO(r.graph << " " << r.check << " " << r.detail);
            CHECK(r.passed);
        }
}
