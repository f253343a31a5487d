#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace stocnet {

// std::mt19937_64's output sequence is fixed by the standard; the
// distributions in <random> are not, so draws are mapped here by hand to keep
// generated graphs identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound), bound > 0. Rejection removes modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = -bound % bound;
        for (;;) {
            std::uint64_t x = engine_();
            if (x >= limit) return x % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return p >= 1.0 || uniform() < p; }

private:
    std::mt19937_64 engine_;
};

// `count` distinct values from [0, universe), ascending (Floyd's algorithm).
std::vector<std::uint64_t> sample_without_replacement(Rng& rng, std::uint64_t universe, std::uint64_t count);

} // namespace stocnet
