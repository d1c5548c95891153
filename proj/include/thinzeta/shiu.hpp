#pragma once

#include <cstdint>
#include <vector>

#include "thinzeta/primes.hpp"
#include "thinzeta/thin_sets.hpp"

namespace thinzeta {

/// A maximal run of consecutive primes p_{r+1}, ..., p_{r+length}, all
/// congruent to c mod d.
struct ShiuRun {
    std::uint64_t r = 0;            // index before the run start
    std::uint64_t start_prime = 0;  // p_{r+1}
    std::uint64_t length = 0;
    std::uint64_t c = 0, d = 0;
    double ratio = 0.0;  // length / (loglog r logloglogog r / (logloglog r)^2)^{1/phi(d)}; NaN when undefined
};

/// Scans the table ascending and records every run that sets a new length
/// record. DomainError unless gcd(c, d) = 1.
std::vector<ShiuRun> shiu_scan(std::uint64_t c, std::uint64_t d, const PrimeTable& table);

/// First `count` primes p in P with p = c mod dmod, ascending. When the
/// table runs out first, the partial list is returned with the flag set.
struct ProgressionSample {
    std::vector<std::uint64_t> primes;
    bool exhausted_table = false;
};

ProgressionSample progression_members(const SetDescriptor& d, std::uint64_t c, std::uint64_t dmod,
                                      std::uint64_t count, const PrimeTable& table);

}  // namespace thinzeta
