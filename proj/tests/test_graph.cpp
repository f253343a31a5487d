#include "doctest.h"

#include "stocnet/error.hpp"
#include "stocnet/generators.hpp"
#include "stocnet/graph.hpp"

#include <numeric>
#include <set>
#include <sstream>

using namespace stocnet;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::IoError;
}

std::int64_t degree_sum(const Graph& g) {
    std::int64_t s = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) s += g.degree(v);
    return s;
}

std::set<std::pair<Label, Label>> labelled_edges(const Graph& g) {
    std::set<std::pair<Label, Label>> out;
    for (const auto& e : g.edges()) {
        auto a = g.label(e.u), b = g.label(e.v);
        out.emplace(std::min(a, b), std::max(a, b));
    }
    return out;
}

} // namespace

TEST_CASE("build_graph: path and complete graph") {
    std::vector<std::pair<Label, Label>> path{{0, 1}, {1, 2}};
    auto g = build_graph(path);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);

    std::vector<std::pair<Label, Label>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto h = build_graph(k4);
    CHECK(h.node_count() == 4);
    CHECK(h.edge_count() == 6);
    CHECK(degree_sum(h) == 12);
}

TEST_CASE("build_graph: validation errors") {
    std::vector<std::pair<Label, Label>> loop{{0, 0}};
    CHECK(kind_of([&] { build_graph(loop); }) == ErrorKind::SelfLoop);

    std::vector<std::pair<Label, Label>> dup{{0, 1}, {1, 2}, {1, 0}};
    CHECK(kind_of([&] { build_graph(dup); }) == ErrorKind::DuplicateEdge);
    try {
        build_graph(dup);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("pair 2") != std::string::npos);
    }

    std::vector<std::pair<Label, Label>> big{{0, 5}};
    CHECK(kind_of([&] { build_graph(big, 3); }) == ErrorKind::IdOutOfRange);
    std::vector<std::pair<Label, Label>> neg{{0, -1}};
    CHECK(kind_of([&] { build_graph(neg); }) == ErrorKind::IdOutOfRange);

    // a gap in the ids is an isolated node, allowed only with node_count
    std::vector<std::pair<Label, Label>> gap{{0, 2}};
    CHECK(kind_of([&] { build_graph(gap); }) == ErrorKind::IdOutOfRange);
    auto g = build_graph(gap, 4);
    CHECK(g.node_count() == 4);
    CHECK(g.degree(1) == 0);
    CHECK(g.degree(3) == 0);
}

TEST_CASE("neighbor lists are sorted and symmetric") {
    auto g = erdos_renyi(40, 150, 3);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (std::size_t i = 0; i < nb.size(); ++i) {
            auto other = g.neighbors(nb[i]);
            CHECK(std::binary_search(other.begin(), other.end(), v));
            const auto& e = g.edge(g.incident_edges(v)[i]);
            CHECK(((e.u == v && e.v == nb[i]) || (e.v == v && e.u == nb[i])));
        }
    }
    CHECK(degree_sum(g) == 2 * g.edge_count());
    CHECK(g.find_edge(g.edge(7).v, g.edge(7).u) == 7);
}

TEST_CASE("load_edge_list: plain, comments, remapping") {
    std::istringstream plain("0 1\n1 2\n");
    auto g = load_edge_list(plain);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);

    std::istringstream remap("# comment\n5 9\n\n9 7   # trailing\n");
    auto h = load_edge_list(remap);
    CHECK(h.node_count() == 3);
    CHECK(h.edge_count() == 2);
    CHECK(h.label(0) == 5);
    CHECK(h.label(1) == 9);
    CHECK(h.label(2) == 7);
    CHECK(h.find_edge(0, 1).has_value());
    CHECK(h.find_edge(1, 2).has_value());
    CHECK_FALSE(h.find_edge(0, 2).has_value());
}

TEST_CASE("load_edge_list: errors carry line numbers") {
    auto message = [](const std::string& text) {
        std::istringstream in(text);
        try {
            load_edge_list(in);
        } catch (const Error& e) {
            return std::pair{e.kind(), std::string(e.what())};
        }
        return std::pair{ErrorKind::IoError, std::string("no error")};
    };
    auto [k1, m1] = message("1 2 3\n");
    CHECK(k1 == ErrorKind::ParseError);
    CHECK(m1.find("line 1") != std::string::npos);

    auto [k2, m2] = message("0 1\n# x\n1 x\n");
    CHECK(k2 == ErrorKind::ParseError);
    CHECK(m2.find("line 3") != std::string::npos);

    auto [k3, m3] = message("0 1\n4 4\n");
    CHECK(k3 == ErrorKind::SelfLoop);
    CHECK(m3.find("line 2") != std::string::npos);

    auto [k4, m4] = message("0 1\n1 2\n2 1\n");
    CHECK(k4 == ErrorKind::DuplicateEdge);
    CHECK(m4.find("line 3") != std::string::npos);

    CHECK(message("0 -1\n").first == ErrorKind::ParseError);
}

TEST_CASE("edge list round trip keeps the edge set") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = holme_kim(80, 2, 0.5, seed);
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        auto h = load_edge_list(in);
        CHECK(labelled_edges(g) == labelled_edges(h));
        CHECK(degree_sum(h) == 2 * h.edge_count());
    }
    // relabelled input survives too
    std::istringstream text("10 30\n30 20\n20 10\n");
    auto g = load_edge_list(text);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream again(out.str());
    CHECK(labelled_edges(load_edge_list(again)) == labelled_edges(g));
}

TEST_CASE("connected_component") {
    std::vector<std::pair<Label, Label>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(connected_component(build_graph(k4), 0) == std::vector<NodeId>{0, 1, 2, 3});

    std::vector<std::pair<Label, Label>> two{{0, 1}, {2, 3}};
    auto g = build_graph(two);
    CHECK(connected_component(g, 0) == std::vector<NodeId>{0, 1});
    CHECK_FALSE(is_connected(g));

    auto single = build_graph(std::span<const std::pair<Label, Label>>{}, 1);
    CHECK(connected_component(single, 0) == std::vector<NodeId>{0});
    CHECK(kind_of([&] { connected_component(single, 1); }) == ErrorKind::IdOutOfRange);
}
