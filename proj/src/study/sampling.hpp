#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace faultlens::study::detail {

/// Unbiased draw from [0, n) by rejection.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = 0;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % bound);
}

}  // namespace faultlens::study::detail
