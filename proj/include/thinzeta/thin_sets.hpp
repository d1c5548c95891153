#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thinzeta/beatty.hpp"
#include "thinzeta/primes.hpp"

namespace thinzeta {

/// Primes whose 1-based index lies in the residue class b mod k.
/// b is normalized into [1, k].
struct IndexProgression {
    std::uint64_t k = 1;
    std::uint64_t b = 1;
};

/// Primes whose index lies in the Beatty sequence floor(kappa*m + lambda).
struct BeattyIndex {
    RealSpec kappa;
    RealSpec lambda;
    unsigned precision_bits = 128;
};

/// Primes carrying a fixed coin-flip sign; the set keeps one sign.
/// The flip for p is bit 63 of splitmix64(seed XOR index(p)).
struct RandomSign {
    std::uint64_t seed = 0;
    int sign = +1;
};

struct ExplicitSet {
    std::vector<std::uint64_t> primes;  // ascending
    double delta = 1.0;
};

/// A thin prime set P with its nominal class parameters: relative density
/// delta, error-term exponent sigma0, and (when proven) a constant sup
/// bound on |E(u)| = |(1/delta) pi_P(u) - pi(u)|.
class SetDescriptor {
public:
    static SetDescriptor index_progression(std::uint64_t k, std::int64_t b);
    static SetDescriptor beatty(const RealSpec& kappa, const RealSpec& lambda,
                                unsigned precision_bits = 128);
    static SetDescriptor random_sign(std::uint64_t seed, int sign = +1);
    static SetDescriptor explicit_set(std::vector<std::uint64_t> primes, double delta = 1.0);

    const std::variant<IndexProgression, BeattyIndex, RandomSign, ExplicitSet>& kind() const {
        return kind_;
    }
    double delta() const { return delta_; }
    double inv_delta() const { return inv_delta_; }
    double sigma0() const { return sigma0_; }
    std::optional<double> error_const() const { return error_const_; }

    bool contains_two(const PrimeTable& table) const;
    std::string describe() const;

private:
    SetDescriptor() = default;
    std::variant<IndexProgression, BeattyIndex, RandomSign, ExplicitSet> kind_;
    double delta_ = 1.0;
    double inv_delta_ = 1.0;
    double sigma0_ = 0.0;
    std::optional<double> error_const_;
};

/// Sampled error term E(x) = (1/delta) pi_P(x) - pi(x).
struct ErrorTermProfile {
    std::vector<std::pair<std::uint64_t, double>> samples;  // ascending in x
    double sup_abs = 0.0;
    // least-squares slope of log|E| vs log x over samples with |E| >= 1;
    // NaN when fewer than two samples qualify
    double fitted_exponent = 0.0;
};

/// true iff p belongs to P. NotPrimeError if p is not prime.
bool is_member(const SetDescriptor& d, std::uint64_t p, const PrimeTable& table);

/// All p in P with p <= x_max, ascending.
std::vector<std::uint64_t> enumerate_set(const SetDescriptor& d, std::uint64_t x_max,
                                         const PrimeTable& table);

/// pi_P(x), exact.
std::uint64_t count_up_to(const SetDescriptor& d, std::uint64_t x, const PrimeTable& table);

ErrorTermProfile error_term_profile(const SetDescriptor& d, const std::vector<std::uint64_t>& x_grid,
                                    const PrimeTable& table);

/// Membership of each prime index 1..count as a flat bitmask
/// (mask[i-1] = table.primes()[i-1] in P). Shared streaming core for the
/// prime-sum kernels.
std::vector<bool> membership_mask(const SetDescriptor& d, std::uint64_t count,
                                  const PrimeTable& table);

}  // namespace thinzeta
