#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "thinzeta/certified.hpp"
#include "thinzeta/primes.hpp"
#include "thinzeta/zeta.hpp"

namespace thinzeta {

/// Deterministic coin flips X_p attached to the primes: the sign of p is
/// bit 63 of splitmix64(seed XOR index(p)), so streams are reproducible
/// bit-for-bit from (seed, table).
struct SignAssignment {
    std::uint64_t seed = 0;
};

/// X_p for a prime p. NotPrimeError if p is not prime.
int sign_of(const SignAssignment& a, std::uint64_t p, const PrimeTable& table);

struct LilSample {
    std::uint64_t x;
    std::int64_t s;  // sum of signs over p <= x
    double t;        // s / sqrt(2 pi(x) log log pi(x))
};

/// Iterated-logarithm statistic on a grid. Every grid point must satisfy
/// pi(x) >= 16 so the normalization is positive.
std::vector<LilSample> lil_statistic(const SignAssignment& a, const std::vector<std::uint64_t>& x_grid,
                                     const PrimeTable& table);

/// Same with an arbitrary sign function of the prime index (test hook).
std::vector<LilSample> lil_statistic_with(const std::function<int(std::uint64_t)>& sign_of_index_fn,
                                          const std::vector<std::uint64_t>& x_grid,
                                          const PrimeTable& table);

/// log prod_{p <= X} (1 - X_p p^{-s})^{-1} with a certified geometric tail.
/// Requires sigma > 1.
CertifiedValue log_L_random(const SignAssignment& a, Complex s, std::uint64_t x_cut,
                            const PrimeTable& table);

/// Factor-by-factor product identity at matched truncation:
///   2 log L(s,X) + log zeta_X^plus(s) - log zeta_X^minus(2s) ... residual of
///   L(s,X)^2 = zeta_X^-(2s) zeta_X^-(s)^{-1} zeta_X^+(s)
/// where zeta_X^pm(s) = prod_{X_p = pm} (1 - p^{-s})^{-2}. The identity is
/// exact per factor, so the residual is pure rounding. Requires sigma > 1.
double identity_check(const SignAssignment& a, Complex s, std::uint64_t x_cut,
                      const PrimeTable& table);

}  // namespace thinzeta
