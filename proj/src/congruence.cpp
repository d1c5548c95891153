#include "thinzeta/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "thinzeta/errors.hpp"

namespace thinzeta {

namespace {

std::vector<bool> sumset_step(const std::vector<bool>& reachable, const std::vector<std::uint64_t>& residues,
                              std::uint64_t b) {
    std::vector<bool> next(b, false);
    for (std::uint64_t r = 0; r < b; ++r) {
        if (!reachable[r]) continue;
        for (std::uint64_t q : residues) next[(r + q) % b] = true;
    }
    return next;
}

bool full(const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool x) { return x; });
}

}  // namespace

SolvabilityTable congruence_solvability(const SetDescriptor& d, std::uint64_t b, unsigned s_max,
                                        ResidueMode mode, std::uint64_t x_cut,
                                        const PrimeTable& table) {
    if (b < 1) throw DomainError("congruence_solvability: b must be >= 1");
    if (s_max < 1) throw DomainError("congruence_solvability: s_max must be >= 1");

    std::set<std::uint64_t> residue_set;
    if (mode == ResidueMode::kEmpirical) {
        for (std::uint64_t p : enumerate_set(d, std::min(x_cut, table.limit()), table))
            residue_set.insert(p % b);
        if (residue_set.empty())
            throw DomainError("congruence_solvability: empirical residue set is empty");
    } else {
        // every unit class contains infinitely many elements of P; 2 joins
        // when it is a member
        for (std::uint64_t u = 0; u < b; ++u)
            if (std::gcd(u, b) == 1) residue_set.insert(u % b);
        if (d.contains_two(table)) residue_set.insert(2 % b);
    }

    SolvabilityTable out;
    out.b = b;
    out.residues.assign(residue_set.begin(), residue_set.end());

    std::vector<bool> current(b, false);
    for (std::uint64_t r : out.residues) current[r] = true;

    // the map r -> r (+) residues is deterministic on a finite space, so the
    // trajectory is eventually periodic; detect the first revisit
    std::map<std::vector<bool>, unsigned> seen;
    std::optional<unsigned> first_full;
    unsigned s = 1;
    for (;; ++s) {
        if (s <= s_max) out.reachable.push_back(current);
        if (!first_full && full(current)) first_full = s;
        auto [it, inserted] = seen.emplace(current, s);
        if (!inserted) {
            out.eventually_periodic = true;
            out.verified_up_to = s;  // cycle entered: behavior certified for all s
            break;
        }
        if (s >= s_max && first_full) {
            out.verified_up_to = s;
            break;
        }
        if (s >= s_max + 4 * static_cast<unsigned>(b) + 8) {
            // no cycle met within the scan allowance; report what was verified
            out.verified_up_to = s;
            break;
        }
        current = sumset_step(current, out.residues, b);
    }

    // the full set is absorbing (residues nonempty), so the first full s is
    // valid for every larger s once the trajectory is certified periodic or
    // full was reached inside the verified range
    if (first_full && (out.eventually_periodic || *first_full <= out.verified_up_to))
        out.s1 = *first_full;
    return out;
}

}  // namespace thinzeta
