#include "thinzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thinzeta/errors.hpp"

namespace thinzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_32
constexpr double kBernoulli[] = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
    -7709321041217.0 / 510,
};
constexpr unsigned kMaxEmTerms = sizeof(kBernoulli) / sizeof(kBernoulli[0]);

double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

double rounding_slack(double abs_sum, double ops_per_term) {
    return 4.0 * kEps * abs_sum * (2.0 + ops_per_term);
}

double integer_tail(double x_cut, double sigma) {
    return std::pow(x_cut, 1.0 - sigma) / (sigma - 1.0);
}

double j_tail_bound(double c, unsigned j_cut, double sigma) {
    const double j1 = static_cast<double>(j_cut) + 1.0;
    const double lead = std::exp2(-j1 * sigma) / (j1 * (1.0 - std::exp2(-sigma)));
    return c * lead * (1.0 + 2.0 / (j1 * sigma - 1.0));
}

CertifiedValue zeta_em(Complex s, const TruncationParams& params) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta_em: s = 1 is the pole");
    const unsigned terms = params.em_terms;
    if (terms < 1 || terms > kMaxEmTerms)
        throw DomainError("zeta_em: em_terms must be in [1, " + std::to_string(kMaxEmTerms) + "]");
    const double sigma = s.real();
    if (sigma <= -(2.0 * terms - 1.0))
        throw DomainError("zeta_em: sigma too small for em_terms correction depth");

    const double abs_s = std::abs(s);
    std::uint64_t m = params.em_M;
    if (m == 0) m = std::max<std::uint64_t>(64, static_cast<std::uint64_t>(std::ceil(2.0 * abs_s)));
    if (static_cast<double>(m) < abs_s) throw DomainError("zeta_em: em_M must be >= |s|");

    KahanSum sum;
    sum.add(Complex(1.0, 0.0));
    for (std::uint64_t n = 2; n < m; ++n) sum.add(power_negative(static_cast<double>(n), s));

    const double dm = static_cast<double>(m);
    const Complex m_pow = power_negative(dm, s);  // M^{-s}
    sum.add(m_pow * dm / (s - 1.0));             // M^{1-s}/(s-1)
    sum.add(0.5 * m_pow);

    // correction terms r = 1..terms-1; the terms-th term sizes the remainder
    Complex poch = s;                 // s(s+1)...(s+2r-2)
    Complex m_fall = m_pow / dm;      // M^{-s-2r+1}
    Complex correction_last{0.0, 0.0};
    for (unsigned r = 1; r <= terms; ++r) {
        const Complex term = (kBernoulli[r - 1] / factorial(2 * r)) * poch * m_fall;
        if (r < terms) {
            sum.add(term);
        } else {
            correction_last = term;
        }
        poch *= (s + Complex(2.0 * r - 1.0, 0.0)) * (s + Complex(2.0 * r, 0.0));
        m_fall /= dm * dm;
    }

    // standard Euler-Maclaurin remainder: |R| <= |next term| * |s+2v+1|/(sigma+2v+1)
    const double stretch = std::abs(s + Complex(2.0 * terms - 1.0, 0.0)) / (sigma + 2.0 * terms - 1.0);
    const double err = std::abs(correction_last) * stretch +
                       rounding_slack(sum.abs_sum, 2.0 + abs_s * std::log(dm));
    return {sum.sum, err, true};
}

CertifiedValue dirichlet_L(const CharacterSpec& chi, Complex s, std::uint64_t n_terms) {
    const double sigma = s.real();
    if (sigma <= 0.0) throw DomainError("dirichlet_L: requires sigma > 0");
    if (n_terms < 1) throw DomainError("dirichlet_L: need at least one term");

    KahanSum sum;
    std::int64_t char_sum = 0;  // C(N) = sum_{n<=N} chi(n)
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        const int c = chi.chi(n);
        if (c == 0) continue;
        char_sum += c;
        const Complex t = power_negative(static_cast<double>(n), s);
        sum.add(c > 0 ? t : -t);
    }
    // Abel tail: sum_{n>N} chi(n) n^{-s} = -C(N) N^{-s} + s int_N^inf C(u) u^{-s-1} du
    const double dn = static_cast<double>(n_terms);
    const Complex correction = -static_cast<double>(char_sum) * power_negative(dn, s);
    sum.add(correction);

    const double q = static_cast<double>(chi.modulus());
    const double err = q * (1.0 + std::abs(s) / sigma) * std::pow(dn, -sigma) +
                       rounding_slack(sum.abs_sum, 2.0 + std::abs(s) * std::log(dn));
    return {sum.sum, err, true};
}

namespace {

// One pass over primes <= X: thin and full log-product sums, per-j kernel
// sums, and the exact sup of |E(u)| on [1, X]. Shared by the public
// evaluators so matched-truncation checks reuse identical prime sets.
struct KernelPass {
    Complex thin_log{0.0, 0.0};    // sum over members of -log(1 - p^{-s})
    double thin_log_abs = 0.0;
    Complex full_log{0.0, 0.0};    // same over all primes
    double full_log_abs = 0.0;
    std::vector<Complex> kernel;   // kernel[j-1] = sum_p coeff_p p^{-js}, j = 1..J
    double kernel_abs = 0.0;
    double sup_abs_e = 0.0;        // sup over [1, X] of |(1/delta) pi_P(u) - pi(u)|
    std::uint64_t member_count = 0;
    std::uint64_t prime_count = 0;
};

KernelPass kernel_pass(const SetDescriptor& d, Complex s, std::uint64_t x_cut, unsigned j_cut,
                       const PrimeTable& table) {
    if (x_cut > table.limit()) throw RangeError("prime sums: X exceeds sieve limit");
    const std::uint64_t m = table.pi(x_cut);
    const std::vector<bool> mask = membership_mask(d, m, table);
    const double inv_delta = d.inv_delta();
    const double member_coeff = inv_delta - 1.0;

    KernelPass out;
    out.prime_count = m;
    KahanSum thin_sum, full_sum;
    std::vector<KahanSum> kernel_sums(j_cut);

    double running_e = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
        const bool member = mask[i];
        const double p = static_cast<double>(table.primes()[i]);
        const Complex w = power_negative(p, s);
        const Complex log_term = -std::log(1.0 - w);

        full_sum.add(log_term);
        if (member) {
            thin_sum.add(log_term);
            ++out.member_count;
        }

        const double coeff = member ? member_coeff : -1.0;
        Complex wj = w;
        for (unsigned j = 1; j <= j_cut; ++j) {
            kernel_sums[j - 1].add(coeff * wj);
            wj *= w;
            if (wj == Complex(0.0, 0.0)) break;
        }

        running_e += member ? member_coeff : -1.0;
        out.sup_abs_e = std::max(out.sup_abs_e, std::abs(running_e));
    }

    out.thin_log = thin_sum.sum;
    out.thin_log_abs = thin_sum.abs_sum;
    out.full_log = full_sum.sum;
    out.full_log_abs = full_sum.abs_sum;
    out.kernel.resize(j_cut);
    for (unsigned j = 1; j <= j_cut; ++j) {
        out.kernel[j - 1] = kernel_sums[j - 1].sum;
        out.kernel_abs += kernel_sums[j - 1].abs_sum;
    }
    return out;
}

// tail of term j past X: boundary piece plus the E-integral,
// supE * X^{-j sigma + sigma0'} * (1 + |js| / (j sigma - sigma0'))
double kernel_term_tail(double sup_e, double sigma0p, unsigned j, Complex s, double x_cut) {
    const double js_sigma = j * s.real();
    return sup_e * std::pow(x_cut, -js_sigma + sigma0p) *
           (1.0 + static_cast<double>(j) * std::abs(s) / (js_sigma - sigma0p));
}

double ops_estimate(Complex s, double x_cut) { return 2.0 + std::abs(s) * std::log(x_cut); }

}  // namespace

CertifiedValue log_euler_product_thin(const SetDescriptor& d, Complex s, std::uint64_t x_cut,
                                      const PrimeTable& table) {
    const double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("log_euler_product_thin: direct product needs sigma > 1");
    if (x_cut < 2) throw DomainError("log_euler_product_thin: X must be >= 2");

    const std::vector<std::uint64_t> members = enumerate_set(d, x_cut, table);
    KahanSum sum;
    for (std::uint64_t p : members) sum.add(-std::log(1.0 - power_negative(static_cast<double>(p), s)));

    const double inv_delta = d.inv_delta();
    const double tail =
        inv_delta * integer_tail(static_cast<double>(x_cut), sigma) / (1.0 - std::exp2(-sigma));
    const double err =
        tail + rounding_slack(inv_delta * sum.abs_sum, ops_estimate(s, static_cast<double>(x_cut)));
    return {inv_delta * sum.sum, err, true};
}

CertifiedValue log_L_thin(const SetDescriptor& d, const CharacterSpec& chi, Complex s,
                          std::uint64_t x_cut, const PrimeTable& table) {
    const double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("log_L_thin: direct product needs sigma > 1");
    if (x_cut < 2) throw DomainError("log_L_thin: X must be >= 2");

    const std::vector<std::uint64_t> members = enumerate_set(d, x_cut, table);
    KahanSum sum;
    for (std::uint64_t p : members) {
        const int c = chi.chi(p);
        if (c == 0) continue;  // ramified factor is 1
        const Complex w = power_negative(static_cast<double>(p), s);
        sum.add(-std::log(1.0 - (c > 0 ? w : -w)));
    }

    const double inv_delta = d.inv_delta();
    const double tail =
        inv_delta * integer_tail(static_cast<double>(x_cut), sigma) / (1.0 - std::exp2(-sigma));
    const double err =
        tail + rounding_slack(inv_delta * sum.abs_sum, ops_estimate(s, static_cast<double>(x_cut)));
    return {inv_delta * sum.sum, err, true};
}

CertifiedValue continuation_kernel_term(const SetDescriptor& d, unsigned j, Complex s,
                                        std::uint64_t x_cut, const PrimeTable& table) {
    if (j < 1) throw DomainError("continuation_kernel_term: j must be >= 1");
    const double sigma = s.real();
    if (j * sigma <= d.sigma0())
        throw DomainError("continuation_kernel_term: j*sigma must exceed sigma0");

    const KernelPass pass = kernel_pass(d, s, x_cut, j, table);

    const bool proven = d.error_const().has_value();
    const double sup_e = proven ? *d.error_const() : pass.sup_abs_e;
    const double sigma0p = proven ? 0.0 : d.sigma0();
    const double tail = kernel_term_tail(sup_e, sigma0p, j, s, static_cast<double>(x_cut));
    const double err = tail + rounding_slack(pass.kernel_abs,
                                             ops_estimate(s, static_cast<double>(x_cut)) + j);
    return {pass.kernel[j - 1], err, proven};
}

CertifiedValue continuation_kernel(const SetDescriptor& d, Complex s,
                                   const TruncationParams& params, const PrimeTable& table) {
    const double sigma = s.real();
    if (sigma <= d.sigma0()) throw DomainError("continuation_kernel: requires sigma > sigma0");
    if ((params.J + 1) * sigma <= 1.0)
        throw DomainError("continuation_kernel: (J+1)*sigma must exceed 1; increase J");

    const KernelPass pass = kernel_pass(d, s, params.X, params.J, table);

    KahanSum total;
    for (unsigned j = 1; j <= params.J; ++j)
        total.add(pass.kernel[j - 1] / static_cast<double>(j));

    const bool proven = d.error_const().has_value();
    const double sup_e = proven ? *d.error_const() : pass.sup_abs_e;
    const double sigma0p = proven ? 0.0 : d.sigma0();
    double x_tail = 0.0;
    for (unsigned j = 1; j <= params.J; ++j) {
        const double t = kernel_term_tail(sup_e, sigma0p, j, s, static_cast<double>(params.X)) /
                         static_cast<double>(j);
        x_tail += t;
        if (t < 1e-300) break;
    }
    const double err = x_tail + j_tail_bound(1.0 + d.inv_delta(), params.J, sigma) +
                       rounding_slack(pass.kernel_abs,
                                      ops_estimate(s, static_cast<double>(params.X)) + params.J);
    return {total.sum, err, proven};
}

CertifiedValue thin_zeta(const SetDescriptor& d, Complex s, const TruncationParams& params,
                         const PrimeTable& table) {
    const CertifiedValue kernel = continuation_kernel(d, s, params, table);
    const CertifiedValue zeta = zeta_em(s, params);
    return cv_mul(zeta, cv_exp(kernel));
}

RelationCheck check_zeta_relation(const SetDescriptor& d, Complex s, const TruncationParams& params,
                                  const PrimeTable& table) {
    const double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("check_zeta_relation: requires sigma > 1");
    if ((params.J + 1) * sigma <= 1.0)
        throw DomainError("check_zeta_relation: (J+1)*sigma must exceed 1");

    const KernelPass pass = kernel_pass(d, s, params.X, params.J, table);
    const double inv_delta = d.inv_delta();

    KahanSum kernel_total;
    for (unsigned j = 1; j <= params.J; ++j)
        kernel_total.add(pass.kernel[j - 1] / static_cast<double>(j));

    // log zeta_P^{(X)} - log zeta^{(X)} - sum_{j<=J} f_j^{(X)}/j: the prime
    // tails cancel identically at matched truncation, leaving only the j-tail
    const Complex lhs = inv_delta * pass.thin_log;
    const Complex mid = pass.full_log;

    RelationCheck check;
    check.residual = std::abs(lhs - mid - kernel_total.sum);
    const double abs_mass = inv_delta * pass.thin_log_abs + pass.full_log_abs + pass.kernel_abs;
    check.budget = j_tail_bound(1.0 + inv_delta, params.J, sigma) +
                   rounding_slack(abs_mass, ops_estimate(s, static_cast<double>(params.X)) + params.J);
    check.certified = true;
    return check;
}

QuadraticPieces quadratic_kernel_pieces(const SetDescriptor& d, const CharacterSpec& chi,
                                        unsigned a_num, unsigned b_den, unsigned j, Complex s,
                                        std::uint64_t x_cut, const PrimeTable& table) {
    if (a_num < 1 || b_den < 1) throw DomainError("quadratic pieces: A, B must be >= 1");
    if (x_cut > table.limit()) throw RangeError("quadratic pieces: X exceeds sieve limit");
    const std::uint64_t m = table.pi(x_cut);
    const std::vector<bool> mask = membership_mask(d, m, table);
    const double b_over_delta = b_den * d.inv_delta();
    const double a = a_num;

    const Complex js = static_cast<double>(j) * s;
    KahanSum plus, minus, ramified, full;
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t p = table.primes()[i];
        const Complex wj = power_negative(static_cast<double>(p), js);
        const double coeff = (mask[i] ? b_over_delta : 0.0) - a;
        const int c = chi.chi(p);
        if (c == +1)
            plus.add(coeff * wj);
        else if (c == -1)
            minus.add(coeff * wj);
        else
            ramified.add(coeff * wj);
        full.add(wj);
    }
    return {plus.sum, minus.sum, ramified.sum,
            (static_cast<double>(b_den) - static_cast<double>(a_num)) * full.sum};
}

QuadraticRelationCheck check_quadratic_relation(const SetDescriptor& d, const CharacterSpec& chi,
                                                unsigned a_num, unsigned b_den, Complex s,
                                                const TruncationParams& params,
                                                const PrimeTable& table) {
    const double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("check_quadratic_relation: requires sigma > 1");
    if (a_num < 1 || b_den < 1) throw DomainError("check_quadratic_relation: A, B must be >= 1");
    if ((params.J + 1) * sigma <= 1.0)
        throw DomainError("check_quadratic_relation: (J+1)*sigma must exceed 1");

    const std::uint64_t x_cut = params.X;
    if (x_cut > table.limit()) throw RangeError("check_quadratic_relation: X exceeds sieve limit");
    const std::uint64_t m = table.pi(x_cut);
    const std::vector<bool> mask = membership_mask(d, m, table);

    const double inv_delta = d.inv_delta();
    const double a = a_num;
    const double b = b_den;
    const double b_over_delta = b * inv_delta;
    const unsigned j_cut = params.J;

    KahanSum log_zeta, log_l_full, log_l_thin;
    std::vector<KahanSum> plus_mem(j_cut), plus_all(j_cut), minus_mem(j_cut), minus_all(j_cut),
        full_all(j_cut);
    double abs_mass = 0.0;

    // empirical E for the chi = -1 component: (B/delta) pi_P^-(u) - A pi^-(u)
    double running_e2 = 0.0;
    double sup_e2 = 0.0;
    std::uint64_t minus_members = 0, minus_total = 0;

    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t p = table.primes()[i];
        const bool member = mask[i];
        const int c = chi.chi(p);
        const Complex w = power_negative(static_cast<double>(p), s);

        log_zeta.add(-std::log(1.0 - w));
        if (c != 0) {
            const Complex lw = -std::log(1.0 - (c > 0 ? w : -w));
            log_l_full.add(lw);
            if (member) log_l_thin.add(lw);
        }

        Complex wj = w;
        for (unsigned j = 1; j <= j_cut; ++j) {
            if (c == +1) {
                if (member) plus_mem[j - 1].add(wj);
                plus_all[j - 1].add(wj);
            } else if (c == -1) {
                if (member) minus_mem[j - 1].add(wj);
                minus_all[j - 1].add(wj);
            }
            full_all[j - 1].add(wj);
            wj *= w;
            if (wj == Complex(0.0, 0.0)) break;
        }

        if (c == -1) {
            ++minus_total;
            if (member) ++minus_members;
            running_e2 += member ? b_over_delta - a : -a;
            sup_e2 = std::max(sup_e2, std::abs(running_e2));
        }
    }

    KahanSum kernel_total;
    for (unsigned j = 1; j <= j_cut; ++j) {
        const double flip = (j % 2 == 0) ? 1.0 : -1.0;
        const Complex f_j = b_over_delta * (plus_mem[j - 1].sum + flip * minus_mem[j - 1].sum) -
                            a * (plus_all[j - 1].sum + flip * minus_all[j - 1].sum) +
                            (b - a) * full_all[j - 1].sum;
        kernel_total.add(f_j / static_cast<double>(j));
        abs_mass += b_over_delta * (plus_mem[j - 1].abs_sum + minus_mem[j - 1].abs_sum) +
                    a * (plus_all[j - 1].abs_sum + minus_all[j - 1].abs_sum) +
                    std::abs(b - a) * full_all[j - 1].abs_sum;
    }
    abs_mass += (a + b) * log_zeta.abs_sum + inv_delta * b * log_l_thin.abs_sum + a * log_l_full.abs_sum;

    const Complex lhs = b * (log_zeta.sum + inv_delta * log_l_thin.sum);
    const Complex rhs = a * (log_zeta.sum + log_l_full.sum);

    QuadraticRelationCheck check;
    check.residual = std::abs(lhs - rhs - kernel_total.sum);

    // certified part: j-tail + rounding at matched truncation
    const double c_bound = b_over_delta + a + std::abs(b - a);
    double budget = j_tail_bound(c_bound, j_cut, sigma) +
                    rounding_slack(abs_mass, ops_estimate(s, static_cast<double>(x_cut)) + j_cut);
    // empirical-E tail of the chi=-1 component (coefficient 2 at odd j);
    // reported against the untruncated relation, uncertified
    for (unsigned j = 1; j <= j_cut; j += 2) {
        const double t = 2.0 * kernel_term_tail(sup_e2, 0.0, j, s, static_cast<double>(x_cut)) /
                         static_cast<double>(j);
        budget += t;
        if (t < 1e-300) break;
    }
    check.budget = budget;
    check.certified = false;

    if (minus_total == 0) throw DomainError("check_quadratic_relation: pi^-(X) = 0");
    check.rho_hat = static_cast<double>(minus_members) / static_cast<double>(minus_total);
    const double target = a / b;
    check.model_mismatch =
        std::abs(check.rho_hat / d.delta() - target) > 0.05 * target;
    return check;
}

}  // namespace thinzeta
