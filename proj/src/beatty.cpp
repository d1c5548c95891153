#include "thinzeta/beatty.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>

#include "thinzeta/errors.hpp"

namespace thinzeta {

namespace {

// [lo, hi] with outward-directed rounding at a fixed precision.
struct Interval {
    mpfr_t lo, hi;

    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }

    bool is_exact() const { return mpfr_equal_p(lo, hi); }
};

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

void parse_decimal(const std::string& text, Interval& out) {
    if (text.empty()) throw DomainError("RealSpec: empty numeric literal");
    char* end_lo = nullptr;
    char* end_hi = nullptr;
    mpfr_strtofr(out.lo, text.c_str(), &end_lo, 10, MPFR_RNDD);
    mpfr_strtofr(out.hi, text.c_str(), &end_hi, 10, MPFR_RNDU);
    if (end_lo != text.c_str() + text.size() || end_hi != text.c_str() + text.size())
        throw DomainError("RealSpec: cannot parse numeric literal '" + text + "'");
}

// denominator must be strictly positive
void interval_div(const Interval& num, const Interval& den, Interval& out) {
    if (mpfr_sgn(den.lo) <= 0) throw DomainError("RealSpec: denominator must be positive");
    mpfr_div(out.lo, num.lo, mpfr_sgn(num.lo) >= 0 ? den.hi : den.lo, MPFR_RNDD);
    mpfr_div(out.hi, num.hi, mpfr_sgn(num.hi) >= 0 ? den.lo : den.hi, MPFR_RNDU);
}

void eval_spec(const std::string& raw, mpfr_prec_t prec, Interval& out) {
    const std::string text = strip_spaces(raw);
    if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
        Interval arg(prec);
        parse_decimal(text.substr(5, text.size() - 6), arg);
        if (mpfr_sgn(arg.lo) < 0) throw DomainError("RealSpec: sqrt of negative value");
        mpfr_sqrt(out.lo, arg.lo, MPFR_RNDD);
        mpfr_sqrt(out.hi, arg.hi, MPFR_RNDU);
        return;
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Interval num(prec), den(prec);
        parse_decimal(text.substr(0, slash), num);
        parse_decimal(text.substr(slash + 1), den);
        interval_div(num, den, out);
        return;
    }
    parse_decimal(text, out);
}

// ceil of a real known to lie in [v.lo, v.hi]; PrecisionError when the
// enclosure does not pin down a single integer.
std::int64_t interval_ceil(const Interval& v, mpfr_prec_t prec) {
    mpfr_t c_lo, c_hi;
    mpfr_init2(c_lo, prec);
    mpfr_init2(c_hi, prec);
    mpfr_ceil(c_lo, v.lo);
    mpfr_ceil(c_hi, v.hi);
    const bool decided = mpfr_equal_p(c_lo, c_hi) && mpfr_fits_slong_p(c_lo, MPFR_RNDN);
    const std::int64_t result = decided ? mpfr_get_si(c_lo, MPFR_RNDN) : 0;
    mpfr_clear(c_lo);
    mpfr_clear(c_hi);
    if (!decided) throw PrecisionError("beatty: ceil undecided at working precision; raise precision_bits");
    return result;
}

std::int64_t interval_floor(const Interval& v, mpfr_prec_t prec) {
    mpfr_t f_lo, f_hi;
    mpfr_init2(f_lo, prec);
    mpfr_init2(f_hi, prec);
    mpfr_floor(f_lo, v.lo);
    mpfr_floor(f_hi, v.hi);
    const bool decided = mpfr_equal_p(f_lo, f_hi) && mpfr_fits_slong_p(f_lo, MPFR_RNDN);
    const std::int64_t result = decided ? mpfr_get_si(f_lo, MPFR_RNDN) : 0;
    mpfr_clear(f_lo);
    mpfr_clear(f_hi);
    if (!decided) throw PrecisionError("beatty: floor undecided at working precision; raise precision_bits");
    return result;
}

// (q - lambda) / kappa as an interval, q integral
void m_bound(std::int64_t q, const Interval& kappa, const Interval& lambda, mpfr_prec_t prec, Interval& out) {
    Interval num(prec);
    mpfr_si_sub(num.lo, q, lambda.hi, MPFR_RNDD);
    mpfr_si_sub(num.hi, q, lambda.lo, MPFR_RNDU);
    interval_div(num, kappa, out);
}

}  // namespace

RealSpec::RealSpec(std::string text) : text_(std::move(text)) {
    Interval probe(64);
    eval_spec(text_, 64, probe);  // validates syntax
}

double RealSpec::approx() const {
    Interval v(64);
    eval_spec(text_, 64, v);
    mpfr_t mid;
    mpfr_init2(mid, 64);
    mpfr_add(mid, v.lo, v.hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    const double r = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return r;
}

BeattySequence::BeattySequence(const RealSpec& kappa, const RealSpec& lambda, unsigned precision_bits)
    : kappa_(kappa), lambda_(lambda), precision_bits_(precision_bits) {
    if (precision_bits_ < 8) throw DomainError("beatty: precision_bits must be >= 8");
    Interval k(precision_bits_);
    eval_spec(kappa_.text(), precision_bits_, k);
    if (mpfr_cmp_ui(k.hi, 1) < 0) throw DomainError("beatty: kappa must be >= 1");
    if (mpfr_cmp_ui(k.lo, 1) < 0 && !k.is_exact())
        throw PrecisionError("beatty: cannot certify kappa >= 1 at working precision");
}

bool BeattySequence::contains(std::int64_t n) const {
    const mpfr_prec_t prec = precision_bits_;
    Interval k(prec), l(prec), m_lo(prec), m_hi(prec);
    eval_spec(kappa_.text(), prec, k);
    eval_spec(lambda_.text(), prec, l);

    // n is a member iff some integer m satisfies (n-lambda)/kappa <= m < (n+1-lambda)/kappa
    m_bound(n, k, l, prec, m_lo);
    m_bound(n + 1, k, l, prec, m_hi);
    const std::int64_t m0 = interval_ceil(m_lo, prec);

    if (mpfr_cmp_si(m_hi.lo, m0) > 0) return true;   // m0 < hi certainly
    if (mpfr_cmp_si(m_hi.hi, m0) <= 0) return false;  // m0 >= hi certainly
    throw PrecisionError("beatty: membership undecided at working precision; raise precision_bits");
}

std::uint64_t BeattySequence::count_up_to(std::uint64_t max_n) const {
    const mpfr_prec_t prec = precision_bits_;
    Interval k(prec), l(prec), m_lo(prec), m_hi(prec);
    eval_spec(kappa_.text(), prec, k);
    eval_spec(lambda_.text(), prec, l);

    // members in [1, max_n] correspond 1-1 to integers m in
    // [(1-lambda)/kappa, (max_n+1-lambda)/kappa)   (kappa >= 1 makes the map injective)
    m_bound(1, k, l, prec, m_lo);
    m_bound(static_cast<std::int64_t>(max_n) + 1, k, l, prec, m_hi);
    const std::int64_t a = interval_ceil(m_lo, prec);
    const std::int64_t b = interval_ceil(m_hi, prec);
    return b > a ? static_cast<std::uint64_t>(b - a) : 0;
}

std::vector<std::uint64_t> BeattySequence::members_up_to(std::uint64_t max_n) const {
    const mpfr_prec_t prec = precision_bits_;
    Interval k(prec), l(prec), m_lo(prec), v(prec);
    eval_spec(kappa_.text(), prec, k);
    eval_spec(lambda_.text(), prec, l);

    m_bound(1, k, l, prec, m_lo);
    std::vector<std::uint64_t> members;
    for (std::int64_t m = interval_ceil(m_lo, prec);; ++m) {
        mpfr_mul_si(v.lo, k.lo, m, m >= 0 ? MPFR_RNDD : MPFR_RNDU);
        mpfr_mul_si(v.hi, k.hi, m, m >= 0 ? MPFR_RNDU : MPFR_RNDD);
        if (m < 0) mpfr_swap(v.lo, v.hi);
        mpfr_add(v.lo, v.lo, l.lo, MPFR_RNDD);
        mpfr_add(v.hi, v.hi, l.hi, MPFR_RNDU);
        const std::int64_t n = interval_floor(v, prec);
        if (n < 1) continue;  // below the window; kappa >= 1 keeps this finite
        if (static_cast<std::uint64_t>(n) > max_n) break;
        members.push_back(static_cast<std::uint64_t>(n));
    }
    return members;
}

}  // namespace thinzeta
