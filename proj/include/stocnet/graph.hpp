#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace stocnet {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using Label = std::int64_t;

// Undirected edge, stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Node ids are contiguous 0..node_count()-1. Each neighbor list is sorted
/// ascending and carries the id of the connecting edge in a parallel array,
/// so per-edge data can be stored in flat vectors indexed by EdgeId.
/// Labels map ids back to the integers that appeared in the input file.
class Graph {
public:
    Graph() = default;

    NodeId node_count() const noexcept { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
    EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }

    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::span<const EdgeId> incident_edges(NodeId v) const noexcept {
        return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
    }
    int degree(NodeId v) const noexcept { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }
    std::optional<EdgeId> find_edge(NodeId a, NodeId b) const noexcept;

    bool contains(NodeId v) const noexcept { return v >= 0 && v < node_count(); }

    std::span<const Label> labels() const noexcept { return labels_; }
    Label label(NodeId v) const noexcept { return labels_[v]; }

    // Order-sensitive hash of (node_count, edges); used to tie derived
    // structures back to the graph they were computed from.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

private:
    friend class GraphAssembler;

    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<EdgeId> incident_;
    std::vector<Label> labels_;
    std::uint64_t fingerprint_ = 0;
};

/// Validates and builds a graph from id pairs. Without node_count the graph
/// spans 0..max id and every node must touch an edge.
Graph build_graph(std::span<const std::pair<Label, Label>> pairs,
                  std::optional<Label> node_count = std::nullopt);

/// Reads "u v" lines ('#' comments, blank lines skipped). Labels are remapped
/// to contiguous ids in order of first appearance.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

/// Writes one "label_u label_v" line per edge.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Nodes reachable from v (including v), ascending.
std::vector<NodeId> connected_component(const Graph& g, NodeId v);

bool is_connected(const Graph& g);

} // namespace stocnet
