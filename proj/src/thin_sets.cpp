#include "thinzeta/thin_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "thinzeta/errors.hpp"
#include "thinzeta/splitmix.hpp"

namespace thinzeta {

SetDescriptor SetDescriptor::index_progression(std::uint64_t k, std::int64_t b) {
    if (k < 1) throw DomainError("index_progression: k must be >= 1");
    // membership depends on b mod k only; normalize into [1, k]
    std::int64_t r = b % static_cast<std::int64_t>(k);
    if (r <= 0) r += static_cast<std::int64_t>(k);
    SetDescriptor d;
    d.kind_ = IndexProgression{k, static_cast<std::uint64_t>(r)};
    d.delta_ = 1.0 / static_cast<double>(k);
    d.inv_delta_ = static_cast<double>(k);
    d.sigma0_ = 0.0;
    d.error_const_ = static_cast<double>(k);  // |E(u)| = |k-b-((pi(u)-b) mod k)| <= k
    return d;
}

SetDescriptor SetDescriptor::beatty(const RealSpec& kappa, const RealSpec& lambda,
                                    unsigned precision_bits) {
    BeattySequence seq(kappa, lambda, precision_bits);  // validates kappa >= 1
    SetDescriptor d;
    d.kind_ = BeattyIndex{kappa, lambda, precision_bits};
    d.inv_delta_ = kappa.approx();
    d.delta_ = 1.0 / d.inv_delta_;
    d.sigma0_ = 0.0;
    // pi_P(x) counts integers in a half-open interval of length pi(x)/kappa,
    // so |kappa*pi_P(x) - pi(x)| < kappa
    d.error_const_ = d.inv_delta_;
    return d;
}

SetDescriptor SetDescriptor::random_sign(std::uint64_t seed, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("random_sign: sign must be +1 or -1");
    SetDescriptor d;
    d.kind_ = RandomSign{seed, sign};
    d.delta_ = 0.5;
    d.inv_delta_ = 2.0;
    d.sigma0_ = 0.5;
    return d;
}

SetDescriptor SetDescriptor::explicit_set(std::vector<std::uint64_t> primes, double delta) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i > 0 && primes[i] <= primes[i - 1])
            throw DomainError("explicit_set: primes must be strictly ascending");
        if (!miller_rabin(primes[i]))
            throw NotPrimeError("explicit_set: " + std::to_string(primes[i]) + " is not prime");
    }
    if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("explicit_set: delta must be in (0,1]");
    SetDescriptor d;
    d.kind_ = ExplicitSet{std::move(primes), delta};
    d.delta_ = delta;
    d.inv_delta_ = 1.0 / delta;
    d.sigma0_ = 0.0;
    return d;
}

bool SetDescriptor::contains_two(const PrimeTable& table) const {
    return is_member(*this, 2, table);
}

std::string SetDescriptor::describe() const {
    std::ostringstream os;
    if (const auto* ip = std::get_if<IndexProgression>(&kind_)) {
        os << "index(k=" << ip->k << ",b=" << ip->b << ")";
    } else if (const auto* bi = std::get_if<BeattyIndex>(&kind_)) {
        os << "beatty(kappa=" << bi->kappa.text() << ",lambda=" << bi->lambda.text()
           << ",bits=" << bi->precision_bits << ")";
    } else if (const auto* rs = std::get_if<RandomSign>(&kind_)) {
        os << "random(seed=" << rs->seed << ",sign=" << (rs->sign > 0 ? "+" : "-") << ")";
    } else {
        const auto& ex = std::get<ExplicitSet>(kind_);
        os << "explicit(n=" << ex.primes.size() << ",delta=" << ex.delta << ")";
    }
    return os.str();
}

bool is_member(const SetDescriptor& d, std::uint64_t p, const PrimeTable& table) {
    if (const auto* ex = std::get_if<ExplicitSet>(&d.kind())) {
        if (!table.is_prime(p)) throw NotPrimeError("is_member: not a prime");
        return std::binary_search(ex->primes.begin(), ex->primes.end(), p);
    }
    const std::uint64_t idx = table.prime_index(p);  // throws NotPrimeError / RangeError
    if (const auto* ip = std::get_if<IndexProgression>(&d.kind()))
        return idx % ip->k == ip->b % ip->k;
    if (const auto* bi = std::get_if<BeattyIndex>(&d.kind()))
        return BeattySequence(bi->kappa, bi->lambda, bi->precision_bits)
            .contains(static_cast<std::int64_t>(idx));
    const auto& rs = std::get<RandomSign>(d.kind());
    return sign_of_index(rs.seed, idx) == rs.sign;
}

std::vector<std::uint64_t> enumerate_set(const SetDescriptor& d, std::uint64_t x_max,
                                         const PrimeTable& table) {
    if (x_max > table.limit()) throw RangeError("enumerate: x_max exceeds sieve limit");
    const std::uint64_t m = table.pi(x_max);
    std::vector<std::uint64_t> out;

    if (const auto* ip = std::get_if<IndexProgression>(&d.kind())) {
        out.reserve(m / ip->k + 1);
        for (std::uint64_t i = ip->b; i <= m; i += ip->k) out.push_back(table.primes()[i - 1]);
    } else if (const auto* bi = std::get_if<BeattyIndex>(&d.kind())) {
        BeattySequence seq(bi->kappa, bi->lambda, bi->precision_bits);
        for (std::uint64_t idx : seq.members_up_to(m)) out.push_back(table.primes()[idx - 1]);
    } else if (const auto* rs = std::get_if<RandomSign>(&d.kind())) {
        out.reserve(m / 2 + 1);
        for (std::uint64_t i = 1; i <= m; ++i)
            if (sign_of_index(rs->seed, i) == rs->sign) out.push_back(table.primes()[i - 1]);
    } else {
        const auto& ex = std::get<ExplicitSet>(d.kind());
        for (std::uint64_t p : ex.primes) {
            if (p > x_max) break;
            out.push_back(p);
        }
    }
    return out;
}

std::uint64_t count_up_to(const SetDescriptor& d, std::uint64_t x, const PrimeTable& table) {
    if (x > table.limit()) throw RangeError("count_up_to: x exceeds sieve limit");
    const std::uint64_t m = table.pi(x);

    if (const auto* ip = std::get_if<IndexProgression>(&d.kind()))
        return m >= ip->b ? (m - ip->b) / ip->k + 1 : 0;
    if (const auto* bi = std::get_if<BeattyIndex>(&d.kind()))
        return BeattySequence(bi->kappa, bi->lambda, bi->precision_bits).count_up_to(m);
    if (const auto* rs = std::get_if<RandomSign>(&d.kind())) {
        std::uint64_t c = 0;
        for (std::uint64_t i = 1; i <= m; ++i)
            if (sign_of_index(rs->seed, i) == rs->sign) ++c;
        return c;
    }
    const auto& ex = std::get<ExplicitSet>(d.kind());
    return static_cast<std::uint64_t>(
        std::upper_bound(ex.primes.begin(), ex.primes.end(), x) - ex.primes.begin());
}

std::vector<bool> membership_mask(const SetDescriptor& d, std::uint64_t count,
                                  const PrimeTable& table) {
    if (count > table.count()) throw RangeError("membership_mask: count exceeds table");
    std::vector<bool> mask(count, false);

    if (const auto* ip = std::get_if<IndexProgression>(&d.kind())) {
        for (std::uint64_t i = ip->b; i <= count; i += ip->k) mask[i - 1] = true;
    } else if (const auto* bi = std::get_if<BeattyIndex>(&d.kind())) {
        BeattySequence seq(bi->kappa, bi->lambda, bi->precision_bits);
        for (std::uint64_t idx : seq.members_up_to(count)) mask[idx - 1] = true;
    } else if (const auto* rs = std::get_if<RandomSign>(&d.kind())) {
        for (std::uint64_t i = 1; i <= count; ++i)
            mask[i - 1] = sign_of_index(rs->seed, i) == rs->sign;
    } else {
        const auto& ex = std::get<ExplicitSet>(d.kind());
        for (std::uint64_t p : ex.primes) {
            if (p > table.limit()) break;
            const std::uint64_t idx = table.prime_index(p);
            if (idx <= count) mask[idx - 1] = true;
        }
    }
    return mask;
}

ErrorTermProfile error_term_profile(const SetDescriptor& d, const std::vector<std::uint64_t>& x_grid,
                                    const PrimeTable& table) {
    if (x_grid.empty()) throw DomainError("error_term_profile: empty grid");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (x_grid[i] < x_grid[i - 1]) throw DomainError("error_term_profile: grid must be ascending");
    if (x_grid.back() > table.limit()) throw RangeError("error_term_profile: grid exceeds sieve limit");

    const std::uint64_t m_max = table.pi(x_grid.back());
    const std::vector<bool> mask = membership_mask(d, m_max, table);

    ErrorTermProfile profile;
    profile.samples.reserve(x_grid.size());
    std::uint64_t member_count = 0;
    std::uint64_t i = 0;  // primes consumed so far
    for (std::uint64_t x : x_grid) {
        const std::uint64_t m = table.pi(x);
        for (; i < m; ++i) member_count += mask[i] ? 1 : 0;
        const double e = d.inv_delta() * static_cast<double>(member_count) - static_cast<double>(m);
        profile.samples.emplace_back(x, e);
        profile.sup_abs = std::max(profile.sup_abs, std::abs(e));
    }

    // log|E| vs log x regression over usable samples
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& [x, e] : profile.samples) {
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
    profile.fitted_exponent =
        (n >= 2 && denom != 0.0) ? (static_cast<double>(n) * sxy - sx * sy) / denom
                                 : std::numeric_limits<double>::quiet_NaN();
    return profile;
}

}  // namespace thinzeta
