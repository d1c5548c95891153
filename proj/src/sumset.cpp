#include "thinzeta/sumset.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

#include "thinzeta/errors.hpp"

namespace thinzeta {

void BitGrid::or_shifted(const BitGrid& other, std::uint64_t shift) {
    if (shift > n_max_) return;
    const std::uint64_t word_shift = shift >> 6;
    const unsigned bit_shift = static_cast<unsigned>(shift & 63);
    const std::size_t n_words = words_.size();

    if (bit_shift == 0) {
        for (std::size_t w = n_words; w-- > word_shift;)
            words_[w] |= other.words_[w - word_shift];
    } else {
        for (std::size_t w = n_words; w-- > word_shift;) {
            std::uint64_t v = other.words_[w - word_shift] << bit_shift;
            if (w > word_shift) v |= other.words_[w - word_shift - 1] >> (64 - bit_shift);
            words_[w] |= v;
        }
    }
    // clear bits above n_max so equality compares stay meaningful
    const unsigned top_bits = static_cast<unsigned>(n_max_ & 63) + 1;
    if (top_bits < 64) words_.back() &= (~0ull) >> (64 - top_bits);
}

std::uint64_t BitGrid::count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::uint64_t BitGrid::count_range(std::uint64_t lo, std::uint64_t hi) const {
    std::uint64_t c = 0;
    for (std::uint64_t n = lo; n <= hi && n <= n_max_; ++n) c += test(n) ? 1 : 0;
    return c;
}

std::vector<BitGrid> sumset_layers(const std::vector<std::uint64_t>& primes, std::uint64_t n_max,
                                   unsigned h_max) {
    if (primes.empty()) throw DomainError("sumset_layers: empty prime list");
    if (n_max < 2) throw DomainError("sumset_layers: N must be >= 2");
    if (h_max < 1) throw DomainError("sumset_layers: h_max must be >= 1");

    std::vector<BitGrid> layers;
    layers.reserve(h_max);
    BitGrid base(n_max);
    for (std::uint64_t p : primes)
        if (p <= n_max) base.set(p);
    layers.push_back(std::move(base));

    for (unsigned h = 2; h <= h_max; ++h) {
        BitGrid next(n_max);
        for (std::uint64_t p : primes) {
            if (p > n_max) break;
            next.or_shifted(layers.back(), p);
        }
        layers.push_back(std::move(next));
    }
    return layers;
}

namespace {

BitGrid layer_at(const std::vector<std::uint64_t>& primes, std::uint64_t n_max, unsigned h,
                 bool descending) {
    BitGrid current(n_max);
    for (std::uint64_t p : primes)
        if (p <= n_max) current.set(p);
    for (unsigned level = 2; level <= h; ++level) {
        BitGrid next(n_max);
        if (descending) {
            for (auto it = primes.rbegin(); it != primes.rend(); ++it)
                if (*it <= n_max) next.or_shifted(current, *it);
        } else {
            for (std::uint64_t p : primes)
                if (p <= n_max) next.or_shifted(current, p);
        }
        current = std::move(next);
    }
    return current;
}

std::vector<std::uint64_t> gaps_in(const BitGrid& grid, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi && n <= grid.n_max(); ++n)
        if (!grid.test(n)) out.push_back(n);
    return out;
}

}  // namespace

CoverageReport minimal_h_cover(const SetDescriptor& d, std::uint64_t n_max, std::uint64_t window_lo,
                               std::uint64_t window_hi, unsigned h_max, const PrimeTable& table) {
    if (window_hi > n_max) throw DomainError("minimal_h_cover: window exceeds N");
    if (window_lo > window_hi) throw DomainError("minimal_h_cover: empty window");
    const std::vector<std::uint64_t> primes = enumerate_set(d, n_max, table);
    if (primes.empty()) throw DomainError("minimal_h_cover: set has no elements <= N");

    CoverageReport report;
    report.n_max = n_max;
    report.window_lo = window_lo;
    report.window_hi = window_hi;
    const double window_size = static_cast<double>(window_hi - window_lo + 1);

    BitGrid current(n_max);
    for (std::uint64_t p : primes)
        if (p <= n_max) current.set(p);

    for (unsigned h = 1; h <= h_max; ++h) {
        if (h > 1) {
            BitGrid next(n_max);
            for (std::uint64_t p : primes) {
                if (p > n_max) break;
                next.or_shifted(current, p);
            }
            current = std::move(next);
        }
        const std::uint64_t covered = current.count_range(window_lo, window_hi);
        report.coverage_fraction.push_back(static_cast<double>(covered) / window_size);
        report.exceptional_count.push_back(window_hi - current.count_range(1, window_hi));
        if (covered == window_hi - window_lo + 1) {
            report.h = h;
            report.minimal_h = h;
            report.covered_in_window = true;
            report.exceptional = gaps_in(current, 1, window_hi);
            return report;
        }
    }
    // not found within h_max: report the final layer's view
    report.h = h_max;
    report.covered_in_window = false;
    report.exceptional = gaps_in(current, 1, window_hi);
    return report;
}

BasisCertificate basis_certificate(const SetDescriptor& d, unsigned h, std::uint64_t n_max,
                                   std::uint64_t n0, const PrimeTable& table) {
    if (h < 1) throw DomainError("basis_certificate: h must be >= 1");
    if (n0 > n_max) throw DomainError("basis_certificate: n0 exceeds N");
    const std::vector<std::uint64_t> primes = enumerate_set(d, n_max, table);
    if (primes.empty()) throw DomainError("basis_certificate: set has no elements <= N");

    const BitGrid ascending = layer_at(primes, n_max, h, /*descending=*/false);
    const BitGrid descending = layer_at(primes, n_max, h, /*descending=*/true);

    BasisCertificate cert;
    cert.h = h;
    cert.window_lo = n0;
    cert.window_hi = n_max;
    cert.consistent = ascending == descending;
    if (!cert.consistent)
        throw DomainError("basis_certificate: layer-order recomputation mismatch (internal bug)");
    cert.window_gaps = gaps_in(descending, n0, n_max);
    cert.verified = cert.window_gaps.empty();
    if (n0 > 1) cert.exceptional_below = gaps_in(descending, 1, n0 - 1);
    return cert;
}

void write_coverage_bitmap(const std::string& path, const BitGrid& grid, unsigned h) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("write_coverage_bitmap: cannot open " + path);
    out.write("TZCV", 4);
    out.put(1);
    unsigned char buf[8];
    auto put_u64 = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
        out.write(reinterpret_cast<const char*>(buf), 8);
    };
    put_u64(h);
    put_u64(grid.n_max());
    const std::uint64_t n_bytes = (grid.n_max() + 1 + 7) / 8;
    for (std::uint64_t b = 0; b < n_bytes; ++b) {
        unsigned char byte = 0;
        for (unsigned bit = 0; bit < 8; ++bit) {
            const std::uint64_t n = 8 * b + bit;
            if (n <= grid.n_max() && grid.test(n)) byte |= static_cast<unsigned char>(1u << bit);
        }
        out.put(static_cast<char>(byte));
    }
    if (!out) throw ResourceError("write_coverage_bitmap: write failed for " + path);
}

BitGrid read_coverage_bitmap(const std::string& path, unsigned* h_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("read_coverage_bitmap: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "TZCV", 4) != 0)
        throw ResourceError("read_coverage_bitmap: bad magic in " + path);
    if (in.get() != 1) throw ResourceError("read_coverage_bitmap: unsupported version");
    unsigned char buf[8];
    auto get_u64 = [&]() {
        in.read(reinterpret_cast<char*>(buf), 8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
        return v;
    };
    const std::uint64_t h = get_u64();
    const std::uint64_t n_max = get_u64();
    BitGrid grid(n_max);
    const std::uint64_t n_bytes = (n_max + 1 + 7) / 8;
    for (std::uint64_t b = 0; b < n_bytes; ++b) {
        const int byte = in.get();
        if (byte < 0) throw ResourceError("read_coverage_bitmap: truncated file");
        for (unsigned bit = 0; bit < 8; ++bit) {
            const std::uint64_t n = 8 * b + bit;
            if (n <= n_max && ((byte >> bit) & 1)) grid.set(n);
        }
    }
    if (h_out) *h_out = static_cast<unsigned>(h);
    return grid;
}

}  // namespace thinzeta
