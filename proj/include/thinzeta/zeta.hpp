#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "thinzeta/certified.hpp"
#include "thinzeta/characters.hpp"
#include "thinzeta/primes.hpp"
#include "thinzeta/thin_sets.hpp"

namespace thinzeta {

using Complex = std::complex<double>;

/// Riemann zeta by Euler-Maclaurin summation. Valid for s != 1 with
/// sigma > -(2 em_terms - 1) and em_M >= |s|; PoleError at s = 1.
CertifiedValue zeta_em(Complex s, const TruncationParams& params = {});

/// L(s,chi) = sum chi(n) n^{-s} truncated at N with an Abel tail
/// correction; err <= q (1 + |s|/sigma) N^{-sigma}. Requires sigma > 0.
CertifiedValue dirichlet_L(const CharacterSpec& chi, Complex s, std::uint64_t n_terms);

/// (1/delta) sum_{p in P, p <= X} -log(1 - p^{-s}); the log of the thin
/// Euler product. Requires sigma > 1 (the direct product diverges below).
CertifiedValue log_euler_product_thin(const SetDescriptor& d, Complex s, std::uint64_t x_cut,
                                      const PrimeTable& table);

/// Same with quadratic twist: (1/delta) sum -log(1 - chi(p) p^{-s}).
CertifiedValue log_L_thin(const SetDescriptor& d, const CharacterSpec& chi, Complex s,
                          std::uint64_t x_cut, const PrimeTable& table);

/// One term of the continuation kernel:
///   (1/delta) sum_{p in P} p^{-js} - sum_p p^{-js},
/// truncated at X. The tail is the integral js int_X^inf u^{-js-1} E(u) du,
/// bounded by |js| supE X^{-j sigma + sigma0'} / (j sigma - sigma0') with
/// sigma0' = 0 when a proven constant sup bound exists (certified), else
/// sigma0' = sigma0 with an empirical sup (uncertified).
CertifiedValue continuation_kernel_term(const SetDescriptor& d, unsigned j, Complex s,
                                        std::uint64_t x_cut, const PrimeTable& table);

/// The continuation kernel itself: sum_{j>=1} j^{-1} (term j), truncated at
/// J with a closed-form geometric bound on the j-tail. Requires
/// sigma > sigma0 and (J+1) sigma > 1. This is log of the ratio between the
/// thin zeta and zeta, analytic down to sigma0.
CertifiedValue continuation_kernel(const SetDescriptor& d, Complex s,
                                   const TruncationParams& params, const PrimeTable& table);

/// zeta_P(s) = zeta(s) exp(f_P(s)) with propagated error. The definition
/// (and the continuation) for sigma0 < sigma <= 1; provably equal to the
/// direct product for sigma > 1.
CertifiedValue thin_zeta(const SetDescriptor& d, Complex s, const TruncationParams& params,
                         const PrimeTable& table);

struct RelationCheck {
    double residual = 0.0;
    double budget = 0.0;
    bool certified = true;
    bool pass() const { return residual <= budget; }
};

/// Consistency of log zeta_P = log zeta + f_P at matched truncation: all
/// three pieces are cut at the same X so their prime tails cancel
/// identically and the budget reduces to the j-tail plus rounding. The
/// zeta factor enters as its X-truncated Euler product; agreement of that
/// product with zeta_em carries the (much larger) prime-tail budget and is
/// checked separately in the test suite. Requires sigma > 1.
RelationCheck check_zeta_relation(const SetDescriptor& d, Complex s, const TruncationParams& params,
                                  const PrimeTable& table);

/// The four truncated prime sums entering the quadratic-twist kernel for a
/// fixed j: over chi(p)=+1, chi(p)=-1, p | q, and all p (with the (B/delta,
/// A) weights applied by the caller).
struct QuadraticPieces {
    Complex chi_plus;   // (B/delta) sum_{p in P, chi=+1} - A sum_{chi=+1}
    Complex chi_minus;  // same over chi = -1
    Complex ramified;   // same over p | q
    Complex full;       // (B - A) sum_p p^{-js}
};

QuadraticPieces quadratic_kernel_pieces(const SetDescriptor& d, const CharacterSpec& chi,
                                        unsigned a_num, unsigned b_den, unsigned j, Complex s,
                                        std::uint64_t x_cut, const PrimeTable& table);

struct QuadraticRelationCheck {
    double residual = 0.0;
    double budget = 0.0;
    bool certified = false;  // empirical-E tail component
    double rho_hat = 0.0;
    bool model_mismatch = false;  // |rho_hat/delta - A/B| relative gap > 0.05
};

/// Matched-truncation check of
///   B (log zeta + log L_P) = A (log zeta + log L) + sum_j j^{-1} f_j(s,chi)
/// with zeta and L entering as X-truncated Euler products. The budget adds
/// the empirical-E bound for the chi=-1 component's tail (uncertified).
/// Requires sigma > 1 and A, B >= 1.
QuadraticRelationCheck check_quadratic_relation(const SetDescriptor& d, const CharacterSpec& chi,
                                                unsigned a_num, unsigned b_den, Complex s,
                                                const TruncationParams& params,
                                                const PrimeTable& table);

// -- shared helpers (also used by the random model) ------------------------

/// base^{-s} for base > 1, in polar form.
inline Complex power_negative(double base, Complex s) {
    const double ln = std::log(base);
    return std::polar(std::exp(-s.real() * ln), -s.imag() * ln);
}

/// Kahan-compensated complex accumulator; keeps long prime sums at
/// a few ulp instead of O(n) ulp.
struct KahanSum {
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};
    double abs_sum = 0.0;  // sum of |term|, for rounding budgets

    void add(Complex term) {
        abs_sum += std::abs(term);
        const Complex y = term - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

/// Rounding budget for a compensated sum with the given absolute mass.
double rounding_slack(double abs_sum, double ops_per_term = 1.0);

/// sum_{n > X} n^{-sigma} <= X^{1-sigma}/(sigma-1), sigma > 1.
double integer_tail(double x_cut, double sigma);

/// Closed-form bound on sum_{j>J} j^{-1} |f_j| for |f_j| <= c (2^{-j sigma}
/// + 2^{1-j sigma}/(j sigma - 1)); needs (J+1) sigma > 1.
double j_tail_bound(double c, unsigned j_cut, double sigma);

}  // namespace thinzeta
