#include "profile.hpp"

namespace stocnet::detail {

const GenerationProfile& ProfileScratch::run(const Graph& g, NodeId start) {
    const auto n = static_cast<std::size_t>(g.node_count());
    if (gen_.size() != n) gen_.assign(n, -1);
    queue_.clear();
    profile_.nodes_at.assign(1, 1);
    profile_.edges_at.assign(2, 0);

    gen_[start] = 0;
    queue_.push_back(start);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const NodeId v = queue_[head];
        const int gv = gen_[v];
        for (NodeId w : g.neighbors(v)) {
            int& gw = gen_[w];
            if (gw < 0) {
                gw = gv + 1;
                queue_.push_back(w);
                if (profile_.nodes_at.size() <= static_cast<std::size_t>(gw)) {
                    profile_.nodes_at.push_back(0);
                    profile_.edges_at.push_back(0);
                }
                ++profile_.nodes_at[gw];
            }
            if (gw == gv + 1 || (gw == gv && w > v)) ++profile_.edges_at[gv + 1];
        }
    }
    for (NodeId v : queue_) gen_[v] = -1;
    return profile_;
}

std::vector<std::int64_t> stoc_by_difference(const std::vector<std::int64_t>& nodes_at,
                                             const std::vector<std::int64_t>& edges_at) {
    std::size_t len = edges_at.size();
    while (len > 1 && edges_at[len - 1] == 0) --len;
    std::vector<std::int64_t> out(len, 0);
    std::int64_t edges = 0;
    std::int64_t nodes = 0;
    std::int64_t previous = 0;
    for (std::size_t m = 0; m < len; ++m) {
        edges += edges_at[m];
        if (m < nodes_at.size()) nodes += nodes_at[m];
        const std::int64_t upto = 1 + edges - nodes;
        out[m] = upto - previous;
        previous = upto;
    }
    return out;
}

} // namespace stocnet::detail
