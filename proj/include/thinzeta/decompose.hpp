#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "thinzeta/primes.hpp"

namespace thinzeta {

/// Three primes summing to an odd n >= 7, each within n^theta of n/3,
/// theta in (63/64, 1). The search walks p1 down and p2 up from n/3, so
/// near-balanced solutions are found first. An empty result means no
/// decomposition exists inside the window (expected only for small n);
/// precondition violations throw.
std::optional<std::array<std::uint64_t, 3>> ternary_decompose(std::uint64_t n, double theta,
                                                              const PrimeTable& table);

/// N as a sum of exactly s primes (s >= 6), each equal to 2 or at least
/// N/12. Follows the constructive route: odd N loses s-3 twos and takes a
/// ternary decomposition; even N splits into two odd halves near N/2, each
/// decomposed, plus s-6 twos. A bounded brute-force fallback covers small N
/// where the constructive path has no room. Empty result = not found.
std::optional<std::vector<std::uint64_t>> balanced_prime_sum(std::uint64_t n_total, unsigned s,
                                                             const PrimeTable& table);

}  // namespace thinzeta
