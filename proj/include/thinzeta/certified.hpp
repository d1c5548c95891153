#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace thinzeta {

/// A computed complex value together with a bound on |computed - true|.
/// `certified` is false when the bound leans on an empirical (unproven)
/// sup|E|. Propagation is first-order and always outward:
///   add: errs sum;  mul: |a| err_b + |b| err_a + err_a err_b;
///   exp: |exp(a)| (e^{err_a} - 1).
struct CertifiedValue {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;
    bool certified = true;

    CertifiedValue() = default;
    CertifiedValue(std::complex<double> v, double e, bool c = true) : value(v), err(e), certified(c) {}
};

inline CertifiedValue cv_add(const CertifiedValue& a, const CertifiedValue& b) {
    return {a.value + b.value, a.err + b.err, a.certified && b.certified};
}

inline CertifiedValue cv_sub(const CertifiedValue& a, const CertifiedValue& b) {
    return {a.value - b.value, a.err + b.err, a.certified && b.certified};
}

inline CertifiedValue cv_mul(const CertifiedValue& a, const CertifiedValue& b) {
    const double err = std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err;
    return {a.value * b.value, err, a.certified && b.certified};
}

inline CertifiedValue cv_scale(double c, const CertifiedValue& a) {
    return {c * a.value, std::abs(c) * a.err, a.certified};
}

inline CertifiedValue cv_exp(const CertifiedValue& a) {
    const std::complex<double> v = std::exp(a.value);
    return {v, std::abs(v) * std::expm1(a.err), a.certified};
}

/// Truncation levels for the analytic evaluators. X cuts prime sums,
/// J cuts the j-series of the continuation kernel, em_M / em_terms control
/// the Euler-Maclaurin zeta evaluation (em_M = 0 picks max(64, 2|s|)).
struct TruncationParams {
    std::uint64_t X = 10'000'000;
    unsigned J = 64;
    std::uint64_t em_M = 0;
    unsigned em_terms = 8;
};

}  // namespace thinzeta
