#pragma once

#include <cstdint>
#include <vector>

#include "thinzeta/primes.hpp"
#include "thinzeta/thin_sets.hpp"

namespace thinzeta {

/// Kronecker symbol (a|n) for n >= 0, total in n. Used with a fundamental
/// discriminant this realizes a primitive quadratic Dirichlet character.
int kronecker(std::int64_t a, std::uint64_t n);

/// D is a fundamental discriminant: D = 1 mod 4 squarefree, or D = 4m with
/// m = 2 or 3 mod 4 squarefree. D = 1 (the trivial character) is rejected.
bool is_fundamental_discriminant(std::int64_t d);

/// A primitive quadratic Dirichlet character chi(n) = (D|n) of modulus |D|.
class CharacterSpec {
public:
    explicit CharacterSpec(std::int64_t d);  // DomainError unless fundamental

    std::int64_t discriminant() const { return d_; }
    std::uint64_t modulus() const { return q_; }

    /// chi(n) in {-1, 0, +1}; period q, completely multiplicative.
    int chi(std::uint64_t n) const { return residue_table_[n % q_]; }

private:
    std::int64_t d_;
    std::uint64_t q_;
    std::vector<std::int8_t> residue_table_;
};

/// #{p <= x : chi(p) = -1}.
std::uint64_t pi_minus(std::uint64_t x, const CharacterSpec& chi, const PrimeTable& table);

/// #{p <= x : p in P and chi(p) = -1}.
std::uint64_t pi_minus_thin(const SetDescriptor& d, std::uint64_t x, const CharacterSpec& chi,
                            const PrimeTable& table);

struct RhoEstimate {
    double rho_hat = 0.0;           // pi_P^-(x_max) / pi^-(x_max)
    ErrorTermProfile residuals;     // pi_P^-(x) - rho_hat * pi^-(x) on the grid
};

/// Empirical proportion of chi(p) = -1 primes that land in P, with the
/// residual profile of the linear model. DomainError when pi^-(x_max) = 0.
RhoEstimate rho_estimate(const SetDescriptor& d, const CharacterSpec& chi,
                         const std::vector<std::uint64_t>& x_grid, const PrimeTable& table);

/// #{p <= x : chi(p) = kappa(p)} where kappa(p) = +1 iff p in P, else -1.
/// Raw counting diagnostic only.
std::uint64_t sign_agreement_count(const SetDescriptor& d, const CharacterSpec& chi,
                                   std::uint64_t x, const PrimeTable& table);

}  // namespace thinzeta
