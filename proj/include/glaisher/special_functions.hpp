#ifndef GLAISHER_SPECIAL_FUNCTIONS_HPP
#define GLAISHER_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "glaisher/bigreal.hpp"
#include "glaisher/constants.hpp"
#include "glaisher/errors.hpp"
#include "glaisher/series_result.hpp"

namespace glaisher {

// ---------------------------------------------------------------------------
// Periodic Bernoulli function P3: the 1-periodic extension of
// B3(t) = t^3 - (3/2) t^2 + t/2 on [0,1), equal to its sine Fourier series
// (3 / 2 pi^3) sum_k sin(2 k pi x) / k^3. Both evaluations are provided; their
// agreement is enforced by test rather than assumed.
// ---------------------------------------------------------------------------

inline BigReal p3_closed(const BigReal& x) {
    if (!(x >= 1.0)) throw domain_error("p3_closed requires x >= 1");
    const prec_t wp = x.precision();
    BigReal t = frac_part(x);
    // Horner: t*(t*(t - 3/2) + 1/2)
    BigReal acc = t - BigReal::ratio(3, 2, wp);
    acc = acc * t + BigReal::ratio(1, 2, wp);
    return acc * t;
}

inline SeriesResult p3_fourier(const BigReal& x, unsigned long terms) {
    if (!(x >= 1.0)) throw domain_error("p3_fourier requires x >= 1");
    if (terms < 1 || terms > 2000000)
        throw domain_error("p3_fourier terms out of range [1, 2e6]");
    const prec_t wp = clamp_precision(x.precision() + 48);
    const BigReal two_pi = ldexp2(const_pi(wp), 1);
    const BigReal t = frac_part(x.rounded_to(wp));

    BigReal sum = BigReal::zero(wp);
    for (unsigned long k = 1; k <= terms; ++k) {
        // sin(2 k pi x) = sin(2 pi frac(k t)); the reduction keeps the argument
        // small so no large-angle bits are lost.
        BigReal angle = two_pi * frac_part(t * k);
        sum += sin(angle) / static_cast<long>(k * k * k);
    }
    BigReal pi3 = pow_si(const_pi(wp), 3);
    BigReal value = BigReal::ratio(3, 2, wp) * sum / pi3;

    // sum_{k>K} k^-3 < 1/(2K^2)
    BigReal tail = BigReal::ratio(3, 4, kMinPrecision) /
                   (pow_si(const_pi(kMinPrecision), 3) * static_cast<long>(terms * terms));
    return SeriesResult(value.rounded_to(x.precision()), terms, tail, true);
}

// ---------------------------------------------------------------------------
// Cosine and sine integrals.
//
// Two evaluation paths. The power series
//   Ci(z) = gamma + ln z + sum_{k>=1} (-z^2)^k / (2k (2k)!)
//   Si(z) = sum_{k>=0} (-z^2)^k z / ((2k+1) (2k+1)!)
// needs ~ z log2(e) guard bits against cancellation but works for every z.
// The auxiliary asymptotic pair
//   f(z) ~ (1/z)   (1 - 2!/z^2 + 4!/z^4 - ...)
//   g(z) ~ (1/z^2) (1 - 3!/z^2 + 5!/z^4 - ...)
// gives Ci(z) = f sin z - g cos z, Si(z) = pi/2 - f cos z - g sin z with error
// bounded by the first omitted term; its attainable floor is about
// sqrt(2 pi / z) e^-z, so it is used only when that floor clears the requested
// tolerance. The path choice is therefore tolerance-aware instead of a fixed
// crossover; a fixed z = 32 split cannot honor tolerances below ~1e-13.
// ---------------------------------------------------------------------------

namespace detail {

// log2 of the smallest term reachable by the asymptotic expansions at z.
inline double asymptotic_floor_log2(double z) {
    if (z <= 1.0) return 0.0;
    return -z * 1.4426950408889634 + 0.5 * std::log2(6.2831853071795865 / z) + 1.0;
}

inline bool asymptotic_applicable(double z, double tol) {
    return z > 33.0 && asymptotic_floor_log2(z) < std::log2(tol) - 2.0;
}

struct AuxFG {
    BigReal f;
    BigReal g;
    long achieved_exp; // log2 bound on the truncation error of either series
};

// Evaluate the auxiliary asymptotic pair, truncating each alternating series
// at the first term below 2^theta_exp or at its smallest term, whichever
// comes first. The remainder is bounded by the first omitted term.
inline AuxFG aux_fg(const BigReal& z, prec_t wp, long theta_exp) {
    BigReal inv_z2 = 1UL / (z * z);
    long worst = -static_cast<long>(wp);

    auto alternating = [&](bool odd_factorials) {
        BigReal term = BigReal::of(1L, wp);
        BigReal sum = BigReal::zero(wp);
        long prev_exp = term.exponent2();
        int sign = 1;
        for (unsigned long m = 0; m < 100000; ++m) {
            sum += sign > 0 ? term : -term;
            unsigned long a = odd_factorials ? 2 * m + 2 : 2 * m + 1;
            unsigned long b = odd_factorials ? 2 * m + 3 : 2 * m + 2;
            BigReal next = term * a * b * inv_z2;
            long e = next.exponent2();
            if (e <= theta_exp) { worst = std::max(worst, e); break; }
            if (e >= prev_exp) { worst = std::max(worst, e); break; } // divergence floor
            term = next;
            prev_exp = e;
            sign = -sign;
        }
        return sum;
    };

    AuxFG out{BigReal(wp), BigReal(wp), worst};
    BigReal sf = alternating(false);
    BigReal sg = alternating(true);
    out.f = sf / z;
    out.g = sg / (z * z);
    out.achieved_exp = worst;
    return out;
}

inline prec_t series_working_prec(double zd, double tol, prec_t extra) {
    double guard = 1.45 * zd + 64.0;
    prec_t wp = bits_for_tolerance(tol) + static_cast<prec_t>(guard) + extra;
    if (wp > kMaxWorkingPrecision)
        throw precision_error("cosine/sine integral series precision ceiling", wp);
    return wp;
}

inline BigReal ci_series(const BigReal& z, double tol, prec_t extra) {
    const double zd = z.to_double();
    const prec_t wp = series_working_prec(zd, tol, extra);
    const long theta_exp = -static_cast<long>(bits_for_tolerance(tol)) - 16;
    BigReal zw = z.rounded_to(wp);
    BigReal neg_z2 = -(zw * zw);

    BigReal u = BigReal::of(1L, wp); // (-z^2)^k / (2k)!
    BigReal sum = BigReal::zero(wp);
    for (unsigned long k = 1; k < 1000000; ++k) {
        u *= neg_z2;
        u = u / (2 * k - 1) / (2 * k);
        BigReal term = u / (2 * k);
        sum += term;
        if (2 * k > static_cast<unsigned long>(zd) && term.exponent2() < theta_exp) break;
    }
    return const_euler_gamma(wp) + log(zw) + sum;
}

inline BigReal si_series(const BigReal& z, double tol, prec_t extra) {
    const double zd = z.to_double();
    const prec_t wp = series_working_prec(zd, tol, extra);
    const long theta_exp = -static_cast<long>(bits_for_tolerance(tol)) - 16;
    BigReal zw = z.rounded_to(wp);
    BigReal neg_z2 = -(zw * zw);

    BigReal u = zw; // (-z^2)^k z / (2k+1)!
    BigReal sum = u;
    for (unsigned long k = 1; k < 1000000; ++k) {
        u *= neg_z2;
        u = u / (2 * k) / (2 * k + 1);
        BigReal term = u / (2 * k + 1);
        sum += term;
        if (2 * k > static_cast<unsigned long>(zd) && term.exponent2() < theta_exp) break;
    }
    return sum;
}

inline BigReal ci_asymptotic(const BigReal& z, double tol, prec_t extra) {
    const prec_t wp = clamp_precision(bits_for_tolerance(tol) + 64 + extra);
    const long theta_exp = std::lround(std::log2(tol)) - 3;
    BigReal zw = z.rounded_to(wp);
    AuxFG fg = aux_fg(zw, wp, theta_exp);
    return fg.f * sin(zw) - fg.g * cos(zw);
}

inline BigReal si_asymptotic(const BigReal& z, double tol, prec_t extra) {
    const prec_t wp = clamp_precision(bits_for_tolerance(tol) + 64 + extra);
    const long theta_exp = std::lround(std::log2(tol)) - 3;
    BigReal zw = z.rounded_to(wp);
    AuxFG fg = aux_fg(zw, wp, theta_exp);
    return ldexp2(const_pi(wp), -1) - fg.f * cos(zw) - fg.g * sin(zw);
}

} // namespace detail

// Ci(z) = -int_z^inf cos(t)/t dt, absolute error <= tol.
inline BigReal ci(const BigReal& z, double tol, prec_t extra_bits = 0) {
    if (!(z > 0.0)) throw domain_error("ci requires z > 0");
    if (!(tol > 0.0)) throw domain_error("ci requires tol > 0");
    const prec_t out = std::max<prec_t>(z.precision(), bits_for_tolerance(tol) + 8);
    BigReal v = detail::asymptotic_applicable(z.to_double(), tol)
                    ? detail::ci_asymptotic(z, tol, extra_bits)
                    : detail::ci_series(z, tol, extra_bits);
    return v.rounded_to(out);
}

// Si(z) = int_0^z sin(t)/t dt, absolute error <= tol. The Taylor denominator
// (2k+1)(2k+1)! equals the equivalent product (2k+1)^2 (2k)!.
inline BigReal si(const BigReal& z, double tol, prec_t extra_bits = 0) {
    if (!(z >= 0.0)) throw domain_error("si requires z >= 0");
    if (!(tol > 0.0)) throw domain_error("si requires tol > 0");
    const prec_t out = std::max<prec_t>(z.precision(), bits_for_tolerance(tol) + 8);
    if (z.is_zero()) return BigReal::zero(out);
    BigReal v = detail::asymptotic_applicable(z.to_double(), tol)
                    ? detail::si_asymptotic(z, tol, extra_bits)
                    : detail::si_series(z, tol, extra_bits);
    return v.rounded_to(out);
}

// Ci at the sine zeros z = 2 k pi, where sin z = 0 and cos z = 1 exactly, so
// Ci(2 k pi) = -g(2 k pi). The divergent asymptotic series for g is truncated
// at its smallest term; when that floor misses tol the evaluation falls back
// to the full ci() path.
inline BigReal ci_at_2kpi(unsigned long k, double tol, prec_t extra_bits = 0) {
    if (k < 1) throw domain_error("ci_at_2kpi requires k >= 1");
    if (!(tol > 0.0)) throw domain_error("ci_at_2kpi requires tol > 0");
    const double zd = 6.283185307179586 * static_cast<double>(k);
    const prec_t out = bits_for_tolerance(tol) + 8;
    if (detail::asymptotic_applicable(zd, tol)) {
        const prec_t wp = clamp_precision(bits_for_tolerance(tol) + 64 + extra_bits);
        const long theta_exp = std::lround(std::log2(tol)) - 3;
        BigReal z = ldexp2(const_pi(wp), 1) * k;
        detail::AuxFG fg = detail::aux_fg(z, wp, theta_exp);
        return (-fg.g).rounded_to(out);
    }
    const prec_t wp = clamp_precision(bits_for_tolerance(tol) + 64 + extra_bits);
    BigReal z = ldexp2(const_pi(wp), 1) * k;
    return ci(z, tol, extra_bits).rounded_to(out);
}

// ---------------------------------------------------------------------------
// Generalized hypergeometric pFq, p <= q (entire in x). At large negative x
// the alternating terms peak near exp(2 sqrt(|x|)) while the value stays
// moderate, so the working precision is escalated by 2 sqrt(|x|) log2(e) + 32
// guard bits over the bits the tolerance asks for.
// ---------------------------------------------------------------------------

inline BigReal hyp_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const BigReal& x, double tol, prec_t extra_bits = 0) {
    if (!(tol > 0.0)) throw domain_error("hyp_pfq requires tol > 0");
    if (a.size() > b.size())
        throw domain_error("hyp_pfq requires p <= q for all-x convergence");
    for (const Rational& q : b)
        if (q.is_nonpositive_integer())
            throw domain_error("hyp_pfq denominator parameter is a non-positive integer");

    const prec_t req = bits_for_tolerance(tol);
    const prec_t out = req + 8;
    if (x.is_zero()) return BigReal::of(1L, out);

    const double ax = std::abs(x.to_double());
    const double escal = 2.0 * std::sqrt(ax) * 1.4426950408889634;
    const prec_t wp_raw = req + static_cast<prec_t>(std::ceil(escal)) + 32 + extra_bits;
    if (wp_raw > kMaxWorkingPrecision)
        throw precision_error(
            "hyp_pfq cancellation exceeds precision ceiling; peak term near 2^" +
                std::to_string(static_cast<long>(escal)),
            wp_raw);
    const prec_t wp = clamp_precision(wp_raw);

    const long theta_exp = -static_cast<long>(req) - 16;
    const unsigned long n_settle =
        static_cast<unsigned long>(std::ceil(std::sqrt(2.0 * ax))) + 4;

    BigReal xw = x.rounded_to(wp);
    BigReal term = BigReal::of(1L, wp);
    BigReal sum = term;
    for (unsigned long n = 0; n < 10000000; ++n) {
        for (const Rational& p : a) {
            term *= p.num + static_cast<long>(n) * p.den;
            if (p.den != 1) term = term / p.den;
        }
        for (const Rational& q : b) {
            if (q.den != 1) term *= q.den;
            term = term / (q.num + static_cast<long>(n) * q.den);
        }
        term *= xw;
        term = term / (n + 1);
        sum += term;
        if (term.is_zero() || (n + 1 >= n_settle && term.exponent2() < theta_exp))
            return sum.rounded_to(out);
    }
    throw precision_error("hyp_pfq failed to settle", wp);
}

} // namespace glaisher

#endif
