#ifndef GLAISHER_BIGREAL_HPP
#define GLAISHER_BIGREAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "glaisher/errors.hpp"

namespace glaisher {

using prec_t = mpfr_prec_t;

// Every value carries at least 64 bits; operations never work above the ceiling.
inline constexpr prec_t kMinPrecision = 64;
inline constexpr prec_t kMaxWorkingPrecision = prec_t{1} << 22;

inline prec_t clamp_precision(prec_t bits) {
    if (bits > kMaxWorkingPrecision)
        throw precision_error("working precision above ceiling", bits);
    return std::max(bits, kMinPrecision);
}

// Number of bits that resolve an absolute tolerance: |err| <= tol needs
// about -log2(tol) fractional bits.
inline prec_t bits_for_tolerance(double tol) {
    if (!(tol > 0.0))
        throw domain_error("tolerance must be positive");
    double b = -std::log2(tol);
    return b <= 0 ? kMinPrecision : clamp_precision(static_cast<prec_t>(b) + 8);
}

// Arbitrary-precision real number tagged with its working precision in bits.
// Arithmetic between two BigReals runs at the max of the operand precisions
// and the result records that precision. All rounding is to nearest.
class BigReal {
public:
    explicit BigReal(prec_t bits = kMinPrecision) {
        mpfr_init2(v_, clamp_precision(bits));
        mpfr_set_nan(v_);
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, kMinPrecision);
        mpfr_swap(v_, o.v_);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    static BigReal of(long x, prec_t bits) {
        BigReal r(bits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal of(unsigned long x, prec_t bits) {
        BigReal r(bits);
        mpfr_set_ui(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal of(int x, prec_t bits) { return of(static_cast<long>(x), bits); }
    static BigReal of(double x, prec_t bits) {
        BigReal r(bits);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal ratio(long num, long den, prec_t bits) {
        if (den == 0) throw domain_error("ratio with zero denominator");
        BigReal r(bits);
        mpfr_set_si(r.v_, num, MPFR_RNDN);
        mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
        return r;
    }
    static BigReal zero(prec_t bits) { return of(0L, bits); }

    // Parses a decimal string (optionally in scientific notation).
    static BigReal parse(std::string_view dec, prec_t bits) {
        BigReal r(bits);
        std::string buf(dec);
        char* end = nullptr;
        if (mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN) == 0 && end == buf.c_str())
            throw domain_error("unparseable decimal literal: " + buf);
        if (end == nullptr || *end != '\0')
            throw domain_error("trailing characters in decimal literal: " + buf);
        return r;
    }

    prec_t precision() const { return mpfr_get_prec(v_); }

    BigReal rounded_to(prec_t bits) const {
        BigReal r(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Binary exponent e with 2^(e-1) <= |x| < 2^e; minimal for x == 0.
    long exponent2() const {
        if (mpfr_zero_p(v_) || !mpfr_number_p(v_)) return mpfr_get_emin();
        return static_cast<long>(mpfr_get_exp(v_));
    }

    // log2(|x|) estimate good to a fraction of a bit; -inf-ish for zero.
    double log2_abs() const {
        if (is_zero() || is_nan()) return -1e300;
        long e = exponent2();
        BigReal m = *this;
        mpfr_abs(m.v_, m.v_, MPFR_RNDN);
        mpfr_mul_2si(m.v_, m.v_, -e, MPFR_RNDN); // mantissa in [1/2, 1)
        return static_cast<double>(e) + std::log2(mpfr_get_d(m.v_, MPFR_RNDN));
    }

    // Decimal rendering. Digits beyond `digits` are truncated toward zero,
    // never rounded up, so printed digits are always earned.
    std::string to_decimal(std::size_t digits, bool truncate = true) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

namespace detail {
inline prec_t joint_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace detail

inline BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(detail::joint_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(detail::joint_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(detail::joint_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(detail::joint_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline BigReal operator-(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

template <std::integral I>
inline BigReal operator*(const BigReal& a, I b) {
    BigReal r(a.precision());
    if constexpr (std::is_signed_v<I>)
        mpfr_mul_si(r.raw(), a.raw(), static_cast<long>(b), MPFR_RNDN);
    else
        mpfr_mul_ui(r.raw(), a.raw(), static_cast<unsigned long>(b), MPFR_RNDN);
    return r;
}
template <std::integral I>
inline BigReal operator*(I a, const BigReal& b) { return b * a; }

template <std::integral I>
inline BigReal operator/(const BigReal& a, I b) {
    BigReal r(a.precision());
    if constexpr (std::is_signed_v<I>)
        mpfr_div_si(r.raw(), a.raw(), static_cast<long>(b), MPFR_RNDN);
    else
        mpfr_div_ui(r.raw(), a.raw(), static_cast<unsigned long>(b), MPFR_RNDN);
    return r;
}
template <std::integral I>
inline BigReal operator/(I a, const BigReal& b) {
    BigReal r(b.precision());
    if constexpr (std::is_signed_v<I>)
        mpfr_si_div(r.raw(), static_cast<long>(a), b.raw(), MPFR_RNDN);
    else
        mpfr_ui_div(r.raw(), static_cast<unsigned long>(a), b.raw(), MPFR_RNDN);
    return r;
}

template <std::integral I>
inline BigReal operator+(const BigReal& a, I b) {
    BigReal r(a.precision());
    if constexpr (std::is_signed_v<I>)
        mpfr_add_si(r.raw(), a.raw(), static_cast<long>(b), MPFR_RNDN);
    else
        mpfr_add_ui(r.raw(), a.raw(), static_cast<unsigned long>(b), MPFR_RNDN);
    return r;
}
template <std::integral I>
inline BigReal operator+(I a, const BigReal& b) { return b + a; }

template <std::integral I>
inline BigReal operator-(const BigReal& a, I b) {
    BigReal r(a.precision());
    if constexpr (std::is_signed_v<I>)
        mpfr_sub_si(r.raw(), a.raw(), static_cast<long>(b), MPFR_RNDN);
    else
        mpfr_sub_ui(r.raw(), a.raw(), static_cast<unsigned long>(b), MPFR_RNDN);
    return r;
}
template <std::integral I>
inline BigReal operator-(I a, const BigReal& b) {
    BigReal r(b.precision());
    if constexpr (std::is_signed_v<I>)
        mpfr_si_sub(r.raw(), static_cast<long>(a), b.raw(), MPFR_RNDN);
    else
        mpfr_ui_sub(r.raw(), static_cast<unsigned long>(a), b.raw(), MPFR_RNDN);
    return r;
}

inline BigReal& operator+=(BigReal& a, const BigReal& b) { a = a + b; return a; }
inline BigReal& operator-=(BigReal& a, const BigReal& b) { a = a - b; return a; }
inline BigReal& operator*=(BigReal& a, const BigReal& b) { a = a * b; return a; }
inline BigReal& operator/=(BigReal& a, const BigReal& b) { a = a / b; return a; }

template <std::integral I>
inline BigReal& operator+=(BigReal& a, I b) { a = a + b; return a; }
template <std::integral I>
inline BigReal& operator-=(BigReal& a, I b) { a = a - b; return a; }
template <std::integral I>
inline BigReal& operator*=(BigReal& a, I b) { a = a * b; return a; }
template <std::integral I>
inline BigReal& operator/=(BigReal& a, I b) { a = a / b; return a; }

inline int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
inline bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

inline bool operator<(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }

#define GLAISHER_UNARY_FN(name, mpfr_fn)                    \
    inline BigReal name(const BigReal& x) {                 \
        BigReal r(x.precision());                           \
        mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);               \
        return r;                                           \
    }

GLAISHER_UNARY_FN(abs, mpfr_abs)
GLAISHER_UNARY_FN(sqrt, mpfr_sqrt)
GLAISHER_UNARY_FN(log, mpfr_log)
GLAISHER_UNARY_FN(exp, mpfr_exp)
GLAISHER_UNARY_FN(sin, mpfr_sin)
GLAISHER_UNARY_FN(cos, mpfr_cos)

#undef GLAISHER_UNARY_FN

inline BigReal floor(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_rint_floor(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline BigReal pow_si(const BigReal& x, long e) {
    BigReal r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

inline BigReal pow(const BigReal& x, const BigReal& e) {
    BigReal r(detail::joint_prec(x, e));
    mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
    return r;
}

inline BigReal ldexp2(const BigReal& x, long e) {
    BigReal r(x.precision());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

// 2^e as a BigReal; exact for any e within the exponent range.
inline BigReal pow2(long e, prec_t bits) {
    BigReal r(bits);
    mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
    return r;
}

inline BigReal frac_part(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_frac(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

// One unit in the last place of x at its own precision (zero-safe).
inline BigReal ulp_of(const BigReal& x) {
    if (x.is_zero()) return pow2(-static_cast<long>(x.precision()), x.precision());
    return pow2(x.exponent2() - static_cast<long>(x.precision()), x.precision());
}

inline std::string BigReal::to_decimal(std::size_t digits, bool truncate) const {
    if (is_nan()) return "nan";
    if (!is_finite()) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0." + std::string(digits > 1 ? digits - 1 : 1, '0');
    if (digits < 2) digits = 2;

    mpfr_exp_t exp10 = 0;
    char* s = mpfr_get_str(nullptr, &exp10, 10, digits, v_,
                           truncate ? MPFR_RNDZ : MPFR_RNDN);
    if (s == nullptr) return "nan";
    std::string m(s);
    mpfr_free_str(s);

    bool neg = !m.empty() && m[0] == '-';
    std::string dig = neg ? m.substr(1) : m;
    std::string out = neg ? "-" : "";

    // exp10 is the position of the decimal point: value = 0.dig * 10^exp10
    if (exp10 >= 1 && exp10 <= static_cast<mpfr_exp_t>(dig.size()) + 6 &&
        exp10 <= 24) {
        if (exp10 >= static_cast<mpfr_exp_t>(dig.size()))
            dig.append(static_cast<std::size_t>(exp10) - dig.size(), '0');
        out += dig.substr(0, static_cast<std::size_t>(exp10));
        std::string frac = dig.substr(static_cast<std::size_t>(exp10));
        out += "." + (frac.empty() ? "0" : frac);
    } else if (exp10 <= 0 && exp10 >= -4) {
        out += "0." + std::string(static_cast<std::size_t>(-exp10), '0') + dig;
    } else {
        out += dig.substr(0, 1) + "." + (dig.size() > 1 ? dig.substr(1) : "0");
        out += "e" + std::to_string(exp10 - 1);
    }
    return out;
}

// Exact rational parameter (used for hypergeometric parameter lists).
struct Rational {
    long num = 0;
    long den = 1;

    BigReal at(prec_t bits) const { return BigReal::ratio(num, den, bits); }
    bool is_nonpositive_integer() const {
        if (den == 0) return true;
        if (num % den != 0) return false;
        return (num / den) <= 0;
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

} // namespace glaisher

#endif
