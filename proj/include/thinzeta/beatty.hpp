#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thinzeta {

/// A real constant given symbolically so it can be evaluated to any
/// precision: a decimal literal ("1.5"), a ratio ("10/3"), or a square
/// root ("sqrt(2)"). Floor-membership questions are discontinuous, so
/// these are never collapsed to a double.
class RealSpec {
public:
    RealSpec() : text_("0") {}
    explicit RealSpec(std::string text);  // DomainError on bad syntax

    const std::string& text() const { return text_; }
    double approx() const;  // nearest double, for display and error budgets

private:
    std::string text_;
};

/// Membership and counting for the set B = { floor(kappa*m + lambda) : m in Z },
/// kappa >= 1, decided in interval arithmetic at precision_bits. Any
/// comparison that the intervals cannot resolve raises PrecisionError
/// rather than guessing.
class BeattySequence {
public:
    BeattySequence(const RealSpec& kappa, const RealSpec& lambda, unsigned precision_bits);

    bool contains(std::int64_t n) const;

    /// #{ n in [1, max_n] : n in B }. O(1) interval evaluations.
    std::uint64_t count_up_to(std::uint64_t max_n) const;

    /// All members of B in [1, max_n], ascending.
    std::vector<std::uint64_t> members_up_to(std::uint64_t max_n) const;

    unsigned precision_bits() const { return precision_bits_; }

private:
    RealSpec kappa_;
    RealSpec lambda_;
    unsigned precision_bits_;
};

}  // namespace thinzeta
