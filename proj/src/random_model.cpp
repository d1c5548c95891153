#include "thinzeta/random_model.hpp"

#include <cmath>

#include "thinzeta/errors.hpp"
#include "thinzeta/splitmix.hpp"

namespace thinzeta {

int sign_of(const SignAssignment& a, std::uint64_t p, const PrimeTable& table) {
    return sign_of_index(a.seed, table.prime_index(p));
}

std::vector<LilSample> lil_statistic_with(const std::function<int(std::uint64_t)>& sign_of_index_fn,
                                          const std::vector<std::uint64_t>& x_grid,
                                          const PrimeTable& table) {
    if (x_grid.empty()) throw DomainError("lil_statistic: empty grid");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (x_grid[i] < x_grid[i - 1]) throw DomainError("lil_statistic: grid must be ascending");
    if (x_grid.back() > table.limit()) throw RangeError("lil_statistic: grid exceeds sieve limit");

    std::vector<LilSample> out;
    out.reserve(x_grid.size());
    std::int64_t s = 0;
    std::uint64_t i = 0;
    for (std::uint64_t x : x_grid) {
        const std::uint64_t m = table.pi(x);
        if (m < 16) throw DomainError("lil_statistic: pi(x) must be >= 16 at every grid point");
        for (; i < m; ++i) s += sign_of_index_fn(i + 1);
        const double n = static_cast<double>(m);
        const double t = static_cast<double>(s) / std::sqrt(2.0 * n * std::log(std::log(n)));
        out.push_back({x, s, t});
    }
    return out;
}

std::vector<LilSample> lil_statistic(const SignAssignment& a, const std::vector<std::uint64_t>& x_grid,
                                     const PrimeTable& table) {
    return lil_statistic_with([&a](std::uint64_t idx) { return sign_of_index(a.seed, idx); }, x_grid,
                              table);
}

CertifiedValue log_L_random(const SignAssignment& a, Complex s, std::uint64_t x_cut,
                            const PrimeTable& table) {
    const double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("log_L_random: requires sigma > 1");
    if (x_cut > table.limit()) throw RangeError("log_L_random: X exceeds sieve limit");

    const std::uint64_t m = table.pi(x_cut);
    KahanSum sum;
    for (std::uint64_t i = 0; i < m; ++i) {
        const double p = static_cast<double>(table.primes()[i]);
        const Complex w = power_negative(p, s);
        const int x_p = sign_of_index(a.seed, i + 1);
        sum.add(-std::log(1.0 - (x_p > 0 ? w : -w)));
    }
    const double err = integer_tail(static_cast<double>(x_cut), sigma) / (1.0 - std::exp2(-sigma)) +
                       rounding_slack(sum.abs_sum, 2.0 + std::abs(s) * std::log(static_cast<double>(x_cut)));
    return {sum.sum, err, true};
}

double identity_check(const SignAssignment& a, Complex s, std::uint64_t x_cut,
                      const PrimeTable& table) {
    const double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("identity_check: requires sigma > 1");
    if (x_cut > table.limit()) throw RangeError("identity_check: X exceeds sieve limit");

    const std::uint64_t m = table.pi(x_cut);
    KahanSum log_l, plus_s, minus_s, minus_2s;
    for (std::uint64_t i = 0; i < m; ++i) {
        const double p = static_cast<double>(table.primes()[i]);
        const Complex w = power_negative(p, s);
        const int x_p = sign_of_index(a.seed, i + 1);
        log_l.add(-std::log(1.0 - (x_p > 0 ? w : -w)));
        const Complex z = -2.0 * std::log(1.0 - w);  // zeta_X^pm factor log at s
        if (x_p > 0) {
            plus_s.add(z);
        } else {
            minus_s.add(z);
            minus_2s.add(-2.0 * std::log(1.0 - w * w));  // same prime set at 2s
        }
    }
    // L^2 * zeta_X^-(s) = zeta_X^-(2s) * zeta_X^+(s), factor by factor
    return std::abs(2.0 * log_l.sum + minus_s.sum - minus_2s.sum - plus_s.sum);
}

}  // namespace thinzeta
