#include "thinzeta/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "thinzeta/errors.hpp"

namespace thinzeta {

int kronecker(std::int64_t a, std::uint64_t n) {
    std::int64_t b = static_cast<std::int64_t>(n);
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (b & 1) == 0) return 0;

    int k = 1;
    int v = 0;
    while ((b & 1) == 0) {
        b >>= 1;
        ++v;
    }
    if (v & 1) {
        const int r = static_cast<int>(((a % 8) + 8) % 8);  // (2|a) for odd a
        if (r == 3 || r == 5) k = -k;
    }
    if (a < 0 && b < 0) k = -k;  // b >= 0 here, kept for the general recurrence below

    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            const int r = static_cast<int>(((b % 8) + 8) % 8);
            if (r == 3 || r == 5) k = -k;
        }
        // quadratic reciprocity; two's-complement bit test reads residues mod 4
        if ((a & b & 2) != 0) k = -k;
        const std::int64_t r = std::llabs(a);
        a = b % r;
        b = r;
    }
    return b == 1 ? k : 0;
}

namespace {

bool squarefree(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

}  // namespace

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    const std::int64_t mod4 = ((d % 4) + 4) % 4;
    if (mod4 == 1) return squarefree(static_cast<std::uint64_t>(std::llabs(d)));
    if (mod4 != 0) return false;
    const std::int64_t m = d / 4;
    const std::int64_t m_mod4 = ((m % 4) + 4) % 4;
    if (m_mod4 != 2 && m_mod4 != 3) return false;
    return squarefree(static_cast<std::uint64_t>(std::llabs(m)));
}

CharacterSpec::CharacterSpec(std::int64_t d) : d_(d) {
    if (!is_fundamental_discriminant(d))
        throw DomainError("CharacterSpec: " + std::to_string(d) +
                          " is not a nontrivial fundamental discriminant");
    q_ = static_cast<std::uint64_t>(std::llabs(d));
    residue_table_.resize(q_);
    for (std::uint64_t n = 0; n < q_; ++n)
        residue_table_[n] = static_cast<std::int8_t>(kronecker(d_, n));
}

std::uint64_t pi_minus(std::uint64_t x, const CharacterSpec& chi, const PrimeTable& table) {
    if (x > table.limit()) throw RangeError("pi_minus: x exceeds sieve limit");
    std::uint64_t count = 0;
    for (std::uint64_t p : table.primes()) {
        if (p > x) break;
        if (chi.chi(p) == -1) ++count;
    }
    return count;
}

std::uint64_t pi_minus_thin(const SetDescriptor& d, std::uint64_t x, const CharacterSpec& chi,
                            const PrimeTable& table) {
    if (x > table.limit()) throw RangeError("pi_minus_thin: x exceeds sieve limit");
    const std::uint64_t m = table.pi(x);
    const std::vector<bool> mask = membership_mask(d, m, table);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < m; ++i)
        if (mask[i] && chi.chi(table.primes()[i]) == -1) ++count;
    return count;
}

RhoEstimate rho_estimate(const SetDescriptor& d, const CharacterSpec& chi,
                         const std::vector<std::uint64_t>& x_grid, const PrimeTable& table) {
    if (x_grid.empty()) throw DomainError("rho_estimate: empty grid");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (x_grid[i] < x_grid[i - 1]) throw DomainError("rho_estimate: grid must be ascending");
    if (x_grid.back() > table.limit()) throw RangeError("rho_estimate: grid exceeds sieve limit");

    const std::uint64_t m_max = table.pi(x_grid.back());
    const std::vector<bool> mask = membership_mask(d, m_max, table);

    std::vector<std::uint64_t> minus_all(x_grid.size()), minus_thin(x_grid.size());
    std::uint64_t all = 0, thin = 0, i = 0;
    for (std::size_t g = 0; g < x_grid.size(); ++g) {
        const std::uint64_t m = table.pi(x_grid[g]);
        for (; i < m; ++i) {
            if (chi.chi(table.primes()[i]) != -1) continue;
            ++all;
            if (mask[i]) ++thin;
        }
        minus_all[g] = all;
        minus_thin[g] = thin;
    }
    if (all == 0) throw DomainError("rho_estimate: pi^-(x_max) = 0, estimate degenerate");

    RhoEstimate est;
    est.rho_hat = static_cast<double>(thin) / static_cast<double>(all);
    est.residuals.samples.reserve(x_grid.size());
    for (std::size_t g = 0; g < x_grid.size(); ++g) {
        const double r = static_cast<double>(minus_thin[g]) - est.rho_hat * static_cast<double>(minus_all[g]);
        est.residuals.samples.emplace_back(x_grid[g], r);
        est.residuals.sup_abs = std::max(est.residuals.sup_abs, std::abs(r));
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& [x, e] : est.residuals.samples) {
        if (std::abs(e) < 1.0) continue;
        const double lx = std::log(static_cast<double>(x));
        const double ly = std::log(std::abs(e));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    est.residuals.fitted_exponent =
        (n >= 2 && denom != 0.0) ? (static_cast<double>(n) * sxy - sx * sy) / denom
                                 : std::numeric_limits<double>::quiet_NaN();
    return est;
}

std::uint64_t sign_agreement_count(const SetDescriptor& d, const CharacterSpec& chi,
                                   std::uint64_t x, const PrimeTable& table) {
    if (x > table.limit()) throw RangeError("sign_agreement_count: x exceeds sieve limit");
    const std::uint64_t m = table.pi(x);
    const std::vector<bool> mask = membership_mask(d, m, table);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < m; ++i) {
        const int kappa = mask[i] ? +1 : -1;
        if (chi.chi(table.primes()[i]) == kappa) ++count;
    }
    return count;
}

}  // namespace thinzeta
