#include "stocnet/graph.hpp"

#include "stocnet/error.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace stocnet {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::BadProbability: return "BadProbability";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::MismatchedInputs: return "MismatchedInputs";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::BadGeneration: return "BadGeneration";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::GenerationFailure: return "GenerationFailure";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const noexcept {
    if (!contains(a) || !contains(b)) return std::nullopt;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nbrs = neighbors(a);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    if (it == nbrs.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nbrs.begin())];
}

// Builds the CSR arrays from already range-checked pairs. `where` renders the
// origin of pair i (list index or file line) for error messages.
class GraphAssembler {
public:
    static Graph assemble(NodeId node_count, std::span<const std::pair<NodeId, NodeId>> pairs,
                          std::vector<Label> labels, const std::function<std::string(std::size_t)>& where) {
        Graph g;
        g.labels_ = std::move(labels);
        g.edges_.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [a, b] = pairs[i];
            if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop on node " + std::to_string(g.labels_[a]) + " at " + where(i));
            g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
        }

        std::vector<std::size_t> degree(static_cast<std::size_t>(node_count), 0);
        for (const Edge& e : g.edges_) {
            ++degree[e.u];
            ++degree[e.v];
        }
        g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
        for (NodeId v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];

        std::vector<std::pair<NodeId, EdgeId>> slots(g.offsets_.back());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            slots[cursor[g.edges_[e].u]++] = {g.edges_[e].v, e};
            slots[cursor[g.edges_[e].v]++] = {g.edges_[e].u, e};
        }
        g.adjacency_.resize(slots.size());
        g.incident_.resize(slots.size());
        for (NodeId v = 0; v < node_count; ++v) {
            auto first = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
            auto last = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
            std::sort(first, last);
            for (auto it = first; it != last; ++it) {
                if (it != first && it->first == (it - 1)->first) {
                    EdgeId later = std::max(it->second, (it - 1)->second);
                    throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(g.labels_[v]) + " " +
                                                              std::to_string(g.labels_[it->first]) +
                                                              " repeated at " + where(static_cast<std::size_t>(later)));
                }
                auto pos = static_cast<std::size_t>(it - slots.begin());
                g.adjacency_[pos] = it->first;
                g.incident_[pos] = it->second;
            }
        }

        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t x) {
            for (int byte = 0; byte < 8; ++byte) {
                h ^= (x >> (8 * byte)) & 0xffU;
                h *= 1099511628211ULL;
            }
        };
        mix(static_cast<std::uint64_t>(node_count));
        for (const Edge& e : g.edges_) mix((static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v));
        g.fingerprint_ = h;

        assert(std::accumulate(degree.begin(), degree.end(), std::size_t{0}) == 2 * g.edges_.size());
        return g;
    }
};

namespace {

constexpr Label max_nodes = std::numeric_limits<NodeId>::max() - 1;

} // namespace

Graph build_graph(std::span<const std::pair<Label, Label>> pairs, std::optional<Label> node_count) {
    auto where = [](std::size_t i) { return "pair " + std::to_string(i); };
    if (node_count && (*node_count < 0 || *node_count > max_nodes))
        throw Error(ErrorKind::IdOutOfRange, "node_count " + std::to_string(*node_count) + " out of range");

    Label n = node_count.value_or(0);
    std::vector<std::pair<NodeId, NodeId>> ids;
    ids.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        for (Label x : {a, b}) {
            if (x < 0 || x > max_nodes || (node_count && x >= *node_count))
                throw Error(ErrorKind::IdOutOfRange, "node id " + std::to_string(x) + " at " + where(i));
        }
        if (!node_count) n = std::max(n, std::max(a, b) + 1);
        ids.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }

    if (!node_count) {
        std::vector<bool> touched(static_cast<std::size_t>(n), false);
        for (auto [a, b] : ids) touched[a] = touched[b] = true;
        for (Label v = 0; v < n; ++v) {
            if (!touched[v])
                throw Error(ErrorKind::IdOutOfRange,
                            "node " + std::to_string(v) + " has no edges; pass node_count to allow isolated nodes");
        }
    }

    std::vector<Label> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), Label{0});
    return GraphAssembler::assemble(static_cast<NodeId>(n), ids, std::move(labels), where);
}

Graph load_edge_list(std::istream& in) {
    std::unordered_map<Label, NodeId> ids;
    std::vector<Label> labels;
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::vector<std::size_t> lines;

    auto intern = [&](Label x) {
        auto [it, inserted] = ids.try_emplace(x, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(x);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        std::vector<std::string> toks;
        while (fields >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected two node labels, got " +
                                                   std::to_string(toks.size()) + " fields");
        Label xy[2];
        for (int i = 0; i < 2; ++i) {
            std::size_t used = 0;
            try {
                xy[i] = std::stoll(toks[i], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != toks[i].size() || toks[i][0] == '+' || xy[i] < 0)
                throw Error(ErrorKind::ParseError,
                            "line " + std::to_string(line_no) + ": '" + toks[i] + "' is not a non-negative integer");
        }
        NodeId a = intern(xy[0]);
        NodeId b = intern(xy[1]);
        if (static_cast<Label>(labels.size()) > max_nodes)
            throw Error(ErrorKind::IdOutOfRange, "line " + std::to_string(line_no) + ": too many nodes");
        pairs.emplace_back(a, b);
        lines.push_back(line_no);
    }
    if (in.bad()) throw Error(ErrorKind::IoError, "read failure");

    auto where = [&lines](std::size_t i) { return "line " + std::to_string(lines[i]); };
    auto n = static_cast<NodeId>(labels.size());
    return GraphAssembler::assemble(n, pairs, std::move(labels), where);
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
    write_edge_list(out, g);
    if (!out) throw Error(ErrorKind::IoError, "write failure on " + path.string());
}

std::vector<NodeId> connected_component(const Graph& g, NodeId v) {
    if (!g.contains(v)) throw Error(ErrorKind::IdOutOfRange, "node id " + std::to_string(v));
    std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
    std::vector<NodeId> stack{v};
    std::vector<NodeId> out;
    seen[v] = true;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (NodeId y : g.neighbors(x)) {
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    return static_cast<NodeId>(connected_component(g, 0).size()) == g.node_count();
}

} // namespace stocnet
