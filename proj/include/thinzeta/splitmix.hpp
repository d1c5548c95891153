#pragma once

#include <cstdint>

namespace thinzeta {

// Fixed mixing function so sign streams are bit-identical across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Coin flip for the prime with 1-based index `index`: +1 or -1.
inline int sign_of_index(std::uint64_t seed, std::uint64_t index) {
    return (splitmix64(seed ^ index) >> 63) ? -1 : +1;
}

}  // namespace thinzeta
