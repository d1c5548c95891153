#include "thinzeta/shiu.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "thinzeta/errors.hpp"

namespace thinzeta {

namespace {

// (loglog r * logloglogog r / (logloglog r)^2)^{1/phi(d)}; defined for r
// large enough that the four-fold logarithm is positive
double shiu_scale(std::uint64_t r, std::uint64_t phi_d) {
    if (r < 16) return std::numeric_limits<double>::quiet_NaN();
    const double l2 = std::log(std::log(static_cast<double>(r)));
    if (l2 <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double l3 = std::log(l2);
    if (l3 <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double l4 = std::log(l3);
    if (l4 <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::pow(l2 * l4 / (l3 * l3), 1.0 / static_cast<double>(phi_d));
}

}  // namespace

std::vector<ShiuRun> shiu_scan(std::uint64_t c, std::uint64_t d, const PrimeTable& table) {
    if (d < 1 || std::gcd(c, d) != 1) throw DomainError("shiu_scan: requires gcd(c, d) = 1");
    const std::uint64_t phi_d = euler_phi(d);
    const std::uint64_t target = c % d;

    std::vector<ShiuRun> records;
    std::uint64_t best = 0;
    std::uint64_t run_start = 0;  // 1-based index of the current run's first prime, 0 = no run
    const auto& primes = table.primes();

    auto close_run = [&](std::uint64_t end_index) {
        if (run_start == 0) return;
        const std::uint64_t length = end_index - run_start + 1;
        if (length > best) {
            best = length;
            const std::uint64_t r = run_start - 1;
            const double scale = shiu_scale(r, phi_d);
            const double ratio = std::isnan(scale) ? scale : static_cast<double>(length) / scale;
            records.push_back({r, primes[run_start - 1], length, c, d, ratio});
        }
        run_start = 0;
    };

    for (std::uint64_t i = 1; i <= table.count(); ++i) {
        if (primes[i - 1] % d == target) {
            if (run_start == 0) run_start = i;
        } else {
            close_run(i - 1);
        }
    }
    close_run(table.count());  // run may extend to the table edge
    return records;
}

ProgressionSample progression_members(const SetDescriptor& d, std::uint64_t c, std::uint64_t dmod,
                                      std::uint64_t count, const PrimeTable& table) {
    if (dmod < 1 || std::gcd(c, dmod) != 1)
        throw DomainError("progression_members: requires gcd(c, d) = 1");

    ProgressionSample sample;
    const std::uint64_t target = c % dmod;
    const std::vector<bool> mask = membership_mask(d, table.count(), table);
    for (std::uint64_t i = 0; i < table.count() && sample.primes.size() < count; ++i) {
        if (!mask[i]) continue;
        if (table.primes()[i] % dmod == target) sample.primes.push_back(table.primes()[i]);
    }
    sample.exhausted_table = sample.primes.size() < count;
    return sample;
}

}  // namespace thinzeta
