#pragma once

#include <cstdint>
#include <random>

namespace conn2k::detail {

// Unbiased draw from [0, n). mt19937_64's output sequence is fully pinned
// down by the standard, and rejection avoids the implementation-defined
// behavior of std::uniform_int_distribution, so results are identical on
// every platform.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
    if (n <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace conn2k::detail
