#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "thinzeta/primes.hpp"
#include "thinzeta/thin_sets.hpp"

namespace thinzeta {

/// Reachability of residues a mod b by sums of s elements drawn (with
/// repetition) from the residue set of P.
struct SolvabilityTable {
    std::uint64_t b = 1;
    std::vector<std::uint64_t> residues;          // residue set of P mod b, ascending
    std::vector<std::vector<bool>> reachable;     // reachable[s-1][r], s = 1..s_max
    std::optional<unsigned> s1;                   // minimal s with Z_b reachable for all s >= s1
    unsigned verified_up_to = 0;                  // reachability established for s <= this
    bool eventually_periodic = false;             // the reachable-set sequence entered a cycle
};

enum class ResidueMode {
    kEmpirical,    // {p mod b : p in P, p <= X}
    kTheoretical,  // all units mod b, plus 2 mod b when 2 in P
};

/// DP closure of the residue sumset in Z_b. The full set is absorbing, so
/// s1 is the first s whose reachable set is all of Z_b; "none" is certified
/// by running the deterministic iteration into a cycle that contains no
/// full set.
SolvabilityTable congruence_solvability(const SetDescriptor& d, std::uint64_t b, unsigned s_max,
                                        ResidueMode mode, std::uint64_t x_cut,
                                        const PrimeTable& table);

}  // namespace thinzeta
