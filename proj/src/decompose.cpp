#include "thinzeta/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "thinzeta/errors.hpp"

namespace thinzeta {

namespace {

bool within_window(std::uint64_t p, double center, double width) {
    return std::abs(static_cast<double>(p) - center) < width;
}

// largest index i with primes[i] <= x, or -1
std::int64_t prime_floor_index(const PrimeTable& table, std::uint64_t x) {
    const auto& primes = table.primes();
    auto it = std::upper_bound(primes.begin(), primes.end(), x);
    return static_cast<std::int64_t>(it - primes.begin()) - 1;
}

}  // namespace

std::optional<std::array<std::uint64_t, 3>> ternary_decompose(std::uint64_t n, double theta,
                                                              const PrimeTable& table) {
    if (n % 2 == 0) throw DomainError("ternary_decompose: n must be odd");
    if (n < 7) throw DomainError("ternary_decompose: n must be >= 7");
    if (!(theta > 63.0 / 64.0 && theta < 1.0))
        throw DomainError("ternary_decompose: theta must lie in (63/64, 1)");
    if (n > table.limit()) throw RangeError("ternary_decompose: n exceeds sieve limit");

    const double center = static_cast<double>(n) / 3.0;
    const double width = std::pow(static_cast<double>(n), theta);
    const auto& primes = table.primes();

    // p1 walks down from n/3, p2 down from (n-p1)/2, so balanced solutions
    // come first; p3 = n - p1 - p2 is then the largest part
    for (std::int64_t i = prime_floor_index(table, n / 3); i >= 0; --i) {
        const std::uint64_t p1 = primes[i];
        if (!within_window(p1, center, width)) break;
        const std::uint64_t m = n - p1;
        for (std::int64_t k = prime_floor_index(table, m / 2); k >= 0; --k) {
            const std::uint64_t p2 = primes[k];
            if (!within_window(p2, center, width)) break;
            const std::uint64_t p3 = m - p2;
            if (!within_window(p3, center, width)) break;  // p3 grows as p2 shrinks
            if (!table.is_prime(p3)) continue;
            return std::array<std::uint64_t, 3>{p1, p2, p3};
        }
    }
    return std::nullopt;
}

namespace {

bool part_ok(std::uint64_t p, std::uint64_t n_total) { return p == 2 || 12 * p >= n_total; }

// bounded DFS: `need` primes, each >= floor_p, summing to remaining
bool dfs_parts(const PrimeTable& table, std::uint64_t remaining, unsigned need,
               std::uint64_t floor_p, std::vector<std::uint64_t>& out, std::uint64_t& budget) {
    if (need == 0) return remaining == 0;
    if (remaining < static_cast<std::uint64_t>(need) * floor_p) return false;
    for (std::int64_t i = prime_floor_index(table, remaining - (need - 1) * floor_p); i >= 0; --i) {
        if (budget-- == 0) return false;
        const std::uint64_t p = table.primes()[i];
        if (p < floor_p) break;
        if (p > remaining) continue;
        out.push_back(p);
        if (dfs_parts(table, remaining - p, need - 1, floor_p, out, budget)) return true;
        out.pop_back();
    }
    return false;
}

std::optional<std::vector<std::uint64_t>> brute_force_parts(std::uint64_t n_total, unsigned s,
                                                            const PrimeTable& table) {
    const std::uint64_t floor_p = std::max<std::uint64_t>(3, (n_total + 11) / 12);
    for (unsigned twos = s; twos + 1 > 0; --twos) {  // prefer many twos, like the construction
        if (2ull * twos > n_total) continue;
        const std::uint64_t rest = n_total - 2ull * twos;
        const unsigned odd_parts = s - twos;
        if (odd_parts == 0) {
            if (rest == 0) return std::vector<std::uint64_t>(s, 2);
            continue;
        }
        if (rest % 2 != odd_parts % 2) continue;  // odd primes: parity must match
        std::vector<std::uint64_t> parts;
        std::uint64_t budget = 4'000'000;
        if (dfs_parts(table, rest, odd_parts, floor_p, parts, budget)) {
            parts.insert(parts.end(), twos, 2);
            std::sort(parts.begin(), parts.end());
            return parts;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> balanced_prime_sum(std::uint64_t n_total, unsigned s,
                                                             const PrimeTable& table) {
    if (s < 6) throw DomainError("balanced_prime_sum: s must be >= 6");
    if (n_total > table.limit()) throw RangeError("balanced_prime_sum: N exceeds sieve limit");
    if (n_total < 2ull * s) return std::nullopt;  // even all twos overshoot

    constexpr double kTheta = 0.99;
    std::vector<std::uint64_t> parts;

    if (n_total % 2 == 1) {
        // drop s-3 twos, ternary-decompose the odd remainder
        const std::uint64_t n = n_total - 2ull * (s - 3);
        if (n >= 7 && n <= table.limit()) {
            if (auto t = ternary_decompose(n, kTheta, table)) {
                parts.assign(t->begin(), t->end());
                parts.insert(parts.end(), s - 3, 2);
            }
        }
    } else {
        // six primes near N/6 plus s-6 twos: split the remainder into two
        // odd halves near the middle and decompose each
        const std::uint64_t m = n_total - 2ull * (s - 6);
        std::uint64_t half = m / 2;
        if (half % 2 == 0) half += 1;
        for (int shift = 0; shift < 64 && parts.empty(); ++shift) {
            const std::uint64_t n1 = half - 2ull * shift;
            const std::uint64_t n2 = m - n1;
            if (n1 < 7 || n2 < 7 || n2 > table.limit()) break;
            const auto t1 = ternary_decompose(n1, kTheta, table);
            if (!t1) continue;
            const auto t2 = ternary_decompose(n2, kTheta, table);
            if (!t2) continue;
            parts.assign(t1->begin(), t1->end());
            parts.insert(parts.end(), t2->begin(), t2->end());
            parts.insert(parts.end(), s - 6, 2);
        }
    }

    auto verified = [&](const std::vector<std::uint64_t>& v) {
        std::uint64_t sum = 0;
        for (std::uint64_t p : v) {
            if (!part_ok(p, n_total)) return false;
            sum += p;
        }
        return v.size() == s && sum == n_total;
    };

    if (!parts.empty() && verified(parts)) {
        std::sort(parts.begin(), parts.end());
        return parts;
    }
    // constructive route out of room (small N) or produced an undersized
    // part: bounded direct search
    auto fallback = brute_force_parts(n_total, s, table);
    if (fallback && verified(*fallback)) return fallback;
    return std::nullopt;
}

}  // namespace thinzeta
