#include "stocnet/rng.hpp"

#include <algorithm>
#include <unordered_set>

namespace stocnet {

std::vector<std::uint64_t> sample_without_replacement(Rng& rng, std::uint64_t universe, std::uint64_t count) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(count) * 2);
    for (std::uint64_t j = universe - count; j < universe; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace stocnet
