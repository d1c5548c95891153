#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinzeta/primes.hpp"
#include "thinzeta/thin_sets.hpp"

namespace thinzeta {

/// Packed bitmap over the integers 0..N; the unit of the sumset DP.
class BitGrid {
public:
    explicit BitGrid(std::uint64_t n_max) : n_max_(n_max), words_((n_max >> 6) + 1, 0) {}

    std::uint64_t n_max() const { return n_max_; }
    bool test(std::uint64_t n) const { return (words_[n >> 6] >> (n & 63)) & 1; }
    void set(std::uint64_t n) { words_[n >> 6] |= 1ull << (n & 63); }

    /// this |= other << shift (tail bits beyond n_max dropped).
    void or_shifted(const BitGrid& other, std::uint64_t shift);

    std::uint64_t count() const;
    std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi) const;  // inclusive
    bool operator==(const BitGrid& rhs) const { return words_ == rhs.words_; }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::uint64_t n_max_;
    std::vector<std::uint64_t> words_;
};

/// bitmap[h-1] marks the integers <= N that are sums of exactly h elements
/// of `primes` (repetition allowed), for h = 1..h_max. Layer h is built
/// from layer h-1 by shift-or over the prime list.
std::vector<BitGrid> sumset_layers(const std::vector<std::uint64_t>& primes, std::uint64_t n_max,
                                   unsigned h_max);

struct CoverageReport {
    unsigned h = 0;  // minimal covering h when found
    std::uint64_t n_max = 0;
    std::uint64_t window_lo = 0, window_hi = 0;
    bool covered_in_window = false;
    std::vector<std::uint64_t> exceptional;       // n in [1, window_hi] not in hP, at h
    std::optional<unsigned> minimal_h;            // empty: not found within h_max
    std::vector<double> coverage_fraction;        // fraction of window covered, per h = 1..
    std::vector<std::uint64_t> exceptional_count; // #{n in [1, window_hi] not in hP}, per h = 1..
};

/// Smallest h <= h_max whose h-fold sumset covers [window_lo, window_hi],
/// with the exceptional set at that h. Not-found is a result, not an error.
CoverageReport minimal_h_cover(const SetDescriptor& d, std::uint64_t n_max, std::uint64_t window_lo,
                               std::uint64_t window_hi, unsigned h_max, const PrimeTable& table);

struct BasisCertificate {
    bool verified = false;       // window fully covered by the recomputation
    bool consistent = false;     // both layer orders produced identical bitmaps
    unsigned h = 0;
    std::uint64_t window_lo = 0, window_hi = 0;
    std::vector<std::uint64_t> exceptional_below;  // gaps in [1, window_lo)
    std::vector<std::uint64_t> window_gaps;        // gaps inside the window, when any
};

/// Re-verifies h-fold coverage of [n0, N] by recomputing the layers with
/// descending prime shifts and comparing bitmaps; a mismatch trips the
/// internal-consistency flag.
BasisCertificate basis_certificate(const SetDescriptor& d, unsigned h, std::uint64_t n_max,
                                   std::uint64_t n0, const PrimeTable& table);

/// Coverage bitmap file: magic "TZCV", version 1, LE u64 h, LE u64 N, then
/// ceil((N+1)/8) bytes, bit n at byte n/8 bit n%8.
void write_coverage_bitmap(const std::string& path, const BitGrid& grid, unsigned h);
BitGrid read_coverage_bitmap(const std::string& path, unsigned* h_out = nullptr);

}  // namespace thinzeta
