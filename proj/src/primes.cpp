#include "thinzeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "thinzeta/errors.hpp"

namespace thinzeta {

namespace {

constexpr std::uint64_t kSegmentBits = 1u << 20;  // odd numbers per segment

void put_u64_le(std::ofstream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64_le(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
    : limit_(limit), primes_(std::move(primes)) {}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
    if (x > limit_) throw RangeError("pi(x): x exceeds sieve limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

std::uint64_t PrimeTable::pi(double x) const {
    if (!(x >= 0.0)) throw RangeError("pi(x): x must be >= 0");
    if (x > static_cast<double>(limit_)) throw RangeError("pi(x): x exceeds sieve limit");
    if (x < 2.0) return 0;
    return pi(static_cast<std::uint64_t>(std::floor(x)));
}

std::uint64_t PrimeTable::nth_prime(std::uint64_t n) const {
    if (n < 1 || n > count()) throw RangeError("nth_prime: index out of range");
    return primes_[n - 1];
}

std::uint64_t PrimeTable::prime_index(std::uint64_t p) const {
    if (p > limit_) throw RangeError("prime_index: p exceeds sieve limit");
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) throw NotPrimeError("prime_index: not a prime");
    return static_cast<std::uint64_t>(it - primes_.begin()) + 1;
}

bool PrimeTable::is_prime(std::uint64_t p) const {
    if (p > limit_) throw RangeError("is_prime: p exceeds sieve limit");
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeTable sieve(std::uint64_t limit) {
    if (limit < 2) throw DomainError("sieve: limit must be >= 2");

    const std::uint64_t sqrt_limit = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;

    // small odd primes <= sqrt(limit) by a plain sieve
    std::vector<std::uint8_t> small(sqrt_limit + 1, 1);
    for (std::uint64_t i = 3; i * i <= sqrt_limit; i += 2)
        if (small[i])
            for (std::uint64_t j = i * i; j <= sqrt_limit; j += 2 * i) small[j] = 0;
    std::vector<std::uint64_t> small_primes;
    for (std::uint64_t i = 3; i <= sqrt_limit; i += 2)
        if (small[i]) small_primes.push_back(i);

    std::vector<std::uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(
        limit > 32 ? 1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit)) : 16));
    primes.push_back(2);

    // segment[i] represents the odd number low + 2*i
    std::vector<std::uint8_t> segment(kSegmentBits);
    std::vector<std::uint64_t> next_multiple(small_primes.size(), 0);
    for (std::size_t k = 0; k < small_primes.size(); ++k)
        next_multiple[k] = small_primes[k] * small_primes[k];

    for (std::uint64_t low = 3; low <= limit; low += 2 * kSegmentBits) {
        const std::uint64_t high = std::min(low + 2 * kSegmentBits - 2, limit | 1);
        const std::uint64_t n_entries = (high - low) / 2 + 1;
        std::fill(segment.begin(), segment.begin() + n_entries, 1);

        for (std::size_t k = 0; k < small_primes.size(); ++k) {
            const std::uint64_t p = small_primes[k];
            if (p * p > high) break;
            std::uint64_t m = next_multiple[k];
            if (m < low) {
                m = ((low + p - 1) / p) * p;
                if ((m & 1) == 0) m += p;  // keep multiples odd
            }
            for (; m <= high; m += 2 * p) segment[(m - low) / 2] = 0;
            next_multiple[k] = m;
        }

        for (std::uint64_t i = 0; i < n_entries; ++i) {
            const std::uint64_t n = low + 2 * i;
            if (segment[i] && n <= limit) primes.push_back(n);
        }
    }

    return PrimeTable(limit, std::move(primes));
}

std::uint64_t euler_phi(std::uint64_t d) {
    if (d < 1) throw DomainError("euler_phi: d must be >= 1");
    std::uint64_t result = d;
    std::uint64_t n = d;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic witness set for n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void write_prime_cache(const std::string& path, const PrimeTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("write_prime_cache: cannot open " + path);
    out.write("TZPT", 4);
    out.put(1);
    put_u64_le(out, table.limit());
    put_u64_le(out, table.count());
    for (std::uint64_t p : table.primes()) put_u64_le(out, p);
    if (!out) throw ResourceError("write_prime_cache: write failed for " + path);
}

PrimeTable read_prime_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("read_prime_cache: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "TZPT", 4) != 0)
        throw ResourceError("read_prime_cache: bad magic in " + path);
    const int version = in.get();
    if (version != 1) throw ResourceError("read_prime_cache: unsupported version");
    const std::uint64_t limit = get_u64_le(in);
    const std::uint64_t count = get_u64_le(in);
    std::vector<std::uint64_t> primes(count);
    for (std::uint64_t i = 0; i < count; ++i) primes[i] = get_u64_le(in);
    if (!in) throw ResourceError("read_prime_cache: truncated file " + path);
    return PrimeTable(limit, std::move(primes));
}

PrimeTable cached_sieve(std::uint64_t limit, const std::string& cache_dir) {
    if (limit < 2) throw DomainError("sieve: limit must be >= 2");
    if (cache_dir.empty()) return sieve(limit);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cache_dir, ec);

    // smallest cached table whose limit covers the request
    std::uint64_t best_limit = 0;
    fs::path best_path;
    for (const auto& entry : fs::directory_iterator(cache_dir, ec)) {
        const std::string name = entry.path().filename().string();
        std::uint64_t cached = 0;
        if (std::sscanf(name.c_str(), "primes_%lu.tzpt", &cached) != 1) continue;
        if (cached >= limit && (best_limit == 0 || cached < best_limit)) {
            best_limit = cached;
            best_path = entry.path();
        }
    }
    if (best_limit > 0) {
        PrimeTable full = read_prime_cache(best_path.string());
        if (full.limit() == limit) return full;
        std::vector<std::uint64_t> primes(full.primes().begin(),
                                          full.primes().begin() + static_cast<std::ptrdiff_t>(full.pi(limit)));
        return PrimeTable(limit, std::move(primes));
    }

    PrimeTable table = sieve(limit);
    write_prime_cache((fs::path(cache_dir) / ("primes_" + std::to_string(limit) + ".tzpt")).string(), table);
    return table;
}

}  // namespace thinzeta
