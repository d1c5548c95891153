#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thinzeta {

/// Sieved primes up to `limit` (inclusive) with index access.
/// primes[i] = p_{i+1}: the table is 0-based, prime indices are 1-based.
/// Immutable after construction; all queries are read-only and thread-safe.
class PrimeTable {
public:
    PrimeTable() = default;
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes);

    std::uint64_t limit() const { return limit_; }
    std::uint64_t count() const { return primes_.size(); }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    /// Prime counting function: #{p <= x}. RangeError if x < 0 or x > limit.
    std::uint64_t pi(double x) const;
    std::uint64_t pi(std::uint64_t x) const;

    /// p_n, 1-based. RangeError unless 1 <= n <= count.
    std::uint64_t nth_prime(std::uint64_t n) const;

    /// Inverse of nth_prime: the 1-based index of a prime p.
    /// NotPrimeError if p <= limit but absent; RangeError if p > limit.
    std::uint64_t prime_index(std::uint64_t p) const;

    bool is_prime(std::uint64_t p) const;

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

/// Segmented odd-only sieve of Eratosthenes, 2^20-entry segments.
/// Memory: ~limit/16 bytes transient plus the output table (8 bytes/prime).
/// Practical ceiling here is a few times 10^9 (table size dominates);
/// DomainError for limit < 2.
PrimeTable sieve(std::uint64_t limit);

/// Euler's totient by trial-division factorization. DomainError for d < 1.
std::uint64_t euler_phi(std::uint64_t d);

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool miller_rabin(std::uint64_t n);

/// Prime cache file ("TZPT", version 1, LE u64 limit, LE u64 count,
/// then count LE u64 primes).
void write_prime_cache(const std::string& path, const PrimeTable& table);
PrimeTable read_prime_cache(const std::string& path);

/// Loads a cache whose limit is >= the requested limit (truncating to it),
/// or sieves and stores `cache_dir/primes_<limit>.tzpt`. Empty cache_dir
/// means no caching.
PrimeTable cached_sieve(std::uint64_t limit, const std::string& cache_dir);

}  // namespace thinzeta
