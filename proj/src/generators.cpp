#include "stocnet/generators.hpp"

#include "stocnet/error.hpp"
#include "stocnet/rng.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace stocnet {

namespace {

using PairList = std::vector<std::pair<Label, Label>>;

Graph finish(const PairList& pairs, std::int64_t n) { return build_graph(pairs, n); }

bool holds(const std::vector<NodeId>& xs, NodeId x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

void erase_value(std::vector<NodeId>& xs, NodeId x) { xs.erase(std::find(xs.begin(), xs.end(), x)); }

void check_probability(double p, ErrorKind kind, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(kind, std::string(name) + " = " + std::to_string(p) + " not in [0, 1]");
}

} // namespace

const char* to_string(Family family) noexcept {
    switch (family) {
    case Family::ring: return "ring";
    case Family::extended_ring: return "extended_ring";
    case Family::triangular_lattice: return "triangular_lattice";
    case Family::square_lattice: return "square_lattice";
    case Family::square_torus: return "square_torus";
    case Family::watts_strogatz: return "watts_strogatz";
    case Family::holme_kim: return "holme_kim";
    case Family::barabasi_albert: return "barabasi_albert";
    case Family::erdos_renyi: return "erdos_renyi";
    }
    return "unknown";
}

Graph generate(const GeneratorSpec& s) {
    switch (s.family) {
    case Family::ring: return ring(s.n);
    case Family::extended_ring: return extended_ring(s.n, s.half_width);
    case Family::triangular_lattice: return triangular_lattice(s.rows, s.cols);
    case Family::square_lattice: return square_lattice(s.rows, s.cols, false);
    case Family::square_torus: return square_lattice(s.rows, s.cols, true);
    case Family::watts_strogatz: return watts_strogatz(s.n, s.base_degree, s.rewire, s.seed);
    case Family::holme_kim: return holme_kim(s.n, s.edges_per_node, s.triad, s.seed);
    case Family::barabasi_albert: return barabasi_albert(s.n, s.edges_per_node, s.seed);
    case Family::erdos_renyi: return erdos_renyi(s.n, s.edge_count, s.seed);
    }
    throw Error(ErrorKind::BadParameter, "unknown family");
}

Graph ring(std::int64_t n) {
    if (n < 3) throw Error(ErrorKind::TooSmall, "ring needs n >= 3, got " + std::to_string(n));
    return extended_ring(n, 1);
}

Graph extended_ring(std::int64_t n, std::int64_t r) {
    if (r < 1 || n <= 2 * r)
        throw Error(ErrorKind::TooSmall,
                    "extended ring needs n > 2r >= 2, got n = " + std::to_string(n) + ", r = " + std::to_string(r));
    PairList pairs;
    pairs.reserve(static_cast<std::size_t>(n * r));
    for (std::int64_t d = 1; d <= r; ++d)
        for (std::int64_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + d) % n);
    return finish(pairs, n);
}

Graph square_lattice(std::int64_t rows, std::int64_t cols, bool torus) {
    const std::int64_t min_side = torus ? 3 : 2;
    if (rows < min_side || cols < min_side)
        throw Error(ErrorKind::TooSmall, std::string(torus ? "torus" : "square lattice") + " needs rows, cols >= " +
                                             std::to_string(min_side));
    auto id = [cols](std::int64_t r, std::int64_t c) { return r * cols + c; };
    PairList pairs;
    for (std::int64_t r = 0; r < rows; ++r) {
        for (std::int64_t c = 0; c < cols; ++c) {
            if (c + 1 < cols || torus) pairs.emplace_back(id(r, c), id(r, (c + 1) % cols));
            if (r + 1 < rows || torus) pairs.emplace_back(id(r, c), id((r + 1) % rows, c));
        }
    }
    return finish(pairs, rows * cols);
}

Graph triangular_lattice(std::int64_t rows, std::int64_t cols) {
    if (rows < 2 || cols < 2) throw Error(ErrorKind::TooSmall, "triangular lattice needs rows, cols >= 2");
    auto id = [cols](std::int64_t r, std::int64_t c) { return r * cols + c; };
    PairList pairs;
    for (std::int64_t r = 0; r < rows; ++r) {
        for (std::int64_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) pairs.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 == rows) continue;
            pairs.emplace_back(id(r, c), id(r + 1, c));
            std::int64_t diag = (r % 2 == 0) ? c - 1 : c + 1;
            if (diag >= 0 && diag < cols) pairs.emplace_back(id(r, c), id(r + 1, diag));
        }
    }
    return finish(pairs, rows * cols);
}

Graph watts_strogatz(std::int64_t n, std::int64_t k, double p, std::uint64_t seed) {
    if (k < 2 || k % 2 != 0 || k + 1 > n)
        throw Error(ErrorKind::BadDegree, "watts_strogatz needs even k with 2 <= k < n, got k = " + std::to_string(k) +
                                              ", n = " + std::to_string(n));
    check_probability(p, ErrorKind::BadProbability, "p");

    const std::int64_t half = k / 2;
    std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
    PairList pairs;
    pairs.reserve(static_cast<std::size_t>(n * half));
    for (std::int64_t d = 1; d <= half; ++d) {
        for (std::int64_t i = 0; i < n; ++i) {
            auto j = (i + d) % n;
            pairs.emplace_back(i, j);
            adj[i].push_back(static_cast<NodeId>(j));
            adj[j].push_back(static_cast<NodeId>(i));
        }
    }

    Rng rng(seed);
    for (auto& [anchor, far] : pairs) {
        if (!rng.bernoulli(p)) continue;
        auto i = static_cast<NodeId>(anchor);
        if (static_cast<std::int64_t>(adj[i].size()) >= n - 1) continue;
        NodeId w;
        do {
            w = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
        } while (w == i || holds(adj[i], w));
        auto old = static_cast<NodeId>(far);
        erase_value(adj[i], old);
        erase_value(adj[old], i);
        adj[i].push_back(w);
        adj[w].push_back(i);
        far = w;
    }
    return finish(pairs, n);
}

Graph holme_kim(std::int64_t n, std::int64_t m, double q, std::uint64_t seed) {
    if (m < 1 || m >= n)
        throw Error(ErrorKind::BadParameter,
                    "holme_kim needs 1 <= m < n, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
    check_probability(q, ErrorKind::BadParameter, "q");

    std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
    // Each edge contributes both endpoints, so a uniform draw from this pool is
    // a degree-proportional draw over nodes.
    std::vector<NodeId> pool;
    PairList pairs;
    pairs.reserve(static_cast<std::size_t>(m * (m + 1) / 2 + (n - m - 1) * m));
    auto link = [&](NodeId a, NodeId b) {
        pairs.emplace_back(a, b);
        adj[a].push_back(b);
        adj[b].push_back(a);
    };

    for (NodeId a = 0; a <= m; ++a)
        for (NodeId b = a + 1; b <= m; ++b) {
            link(a, b);
            pool.push_back(a);
            pool.push_back(b);
        }

    Rng rng(seed);
    std::vector<NodeId> targets;
    std::vector<NodeId> candidates;
    for (auto t = static_cast<NodeId>(m + 1); t < n; ++t) {
        targets.clear();
        auto preferential = [&] {
            NodeId w;
            do {
                w = pool[rng.below(pool.size())];
            } while (holds(targets, w));
            return w;
        };
        for (std::int64_t e = 0; e < m; ++e) {
            NodeId w = -1;
            if (e > 0 && rng.bernoulli(q)) {
                candidates.clear();
                for (NodeId x : adj[targets.back()])
                    if (x != t && !holds(targets, x)) candidates.push_back(x);
                if (!candidates.empty()) w = candidates[rng.below(candidates.size())];
            }
            if (w < 0) w = preferential();
            targets.push_back(w);
            link(t, w);
        }
        for (NodeId w : targets) {
            pool.push_back(t);
            pool.push_back(w);
        }
    }
    return finish(pairs, n);
}

Graph barabasi_albert(std::int64_t n, std::int64_t m, std::uint64_t seed) { return holme_kim(n, m, 0.0, seed); }

Graph erdos_renyi(std::int64_t n, std::int64_t edge_count, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::BadParameter, "erdos_renyi needs n >= 1");
    const std::int64_t possible = n * (n - 1) / 2;
    if (edge_count < 0 || edge_count > possible)
        throw Error(ErrorKind::BadParameter, "erdos_renyi edge_count " + std::to_string(edge_count) + " exceeds " +
                                                 std::to_string(possible) + " possible edges");
    Rng rng(seed);
    auto picked = sample_without_replacement(rng, static_cast<std::uint64_t>(possible),
                                             static_cast<std::uint64_t>(edge_count));
    // Pair index enumerates the upper triangle row by row.
    PairList pairs;
    pairs.reserve(picked.size());
    std::int64_t row = 0;
    std::int64_t row_start = 0;
    for (std::uint64_t idx : picked) {
        auto x = static_cast<std::int64_t>(idx);
        while (x >= row_start + (n - 1 - row)) {
            row_start += n - 1 - row;
            ++row;
        }
        pairs.emplace_back(row, row + 1 + (x - row_start));
    }
    return finish(pairs, n);
}

} // namespace stocnet
