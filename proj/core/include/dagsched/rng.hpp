#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace dagsched {

// Portable draws on top of std::mt19937_64. The engine's output sequence is
// fixed by the standard, but std::uniform_*_distribution and std::shuffle are
// implementation-defined; routing every stochastic decision through these
// helpers keeps seeded runs bit-identical across standard libraries.

// Unbiased integer in [0, bound) by modulo rejection. bound >= 1.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

// Inclusive integer range.
inline std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    draw_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Uniform double in [0, 1) with 53 random bits.
inline double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle driven by draw_below.
template <typename T>
void shuffle_portable(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace dagsched
