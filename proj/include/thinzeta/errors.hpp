#pragma once

#include <stdexcept>
#include <string>

namespace thinzeta {

// Invalid parameter value (bad discriminant, sigma out of the convergence
// half-plane, empty grid, ...). CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Query outside the sieved/tabulated range. Never silently truncated.
class RangeError : public std::runtime_error {
public:
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimeError : public std::runtime_error {
public:
    explicit NotPrimeError(const std::string& what) : std::runtime_error(what) {}
};

// Interval-arithmetic comparison could not be decided at the working
// precision. The caller should retry with more precision_bits.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested exactly at a pole.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Allocation/io failure outside the documented budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace thinzeta
