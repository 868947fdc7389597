#ifndef GLAISHER_REPRESENTATIONS_HPP
#define GLAISHER_REPRESENTATIONS_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "glaisher/bigreal.hpp"
#include "glaisher/constants.hpp"
#include "glaisher/errors.hpp"
#include "glaisher/identities.hpp"
#include "glaisher/series_result.hpp"
#include "glaisher/special_functions.hpp"
#include "glaisher/zeta.hpp"

namespace glaisher {

// The six computation routes for ln A.
enum class Representation {
    r1_zeta_prime_neg1,      // 1/12 - zeta'(-1) through the I3 quadrature
    r2_glaisher_product,     // product formula with the zeta-sum s (reference)
    r3_ci_series,            // 1/4 [1 + (2/pi^2) sum Ci(2 k pi)/k^2]
    r4_zeta_prime_2,         // ln(2 pi)/12 + gamma/12 - zeta'(2)/(2 pi^2)
    r5_hyperfactorial,       // defining limit, evaluated in log space
    r6_hypergeometric_series // sine-integral/hypergeometric series
};

inline const char* to_string(Representation r) {
    switch (r) {
        case Representation::r1_zeta_prime_neg1: return "r1_zeta_prime_neg1";
        case Representation::r2_glaisher_product: return "r2_glaisher_product";
        case Representation::r3_ci_series: return "r3_ci_series";
        case Representation::r4_zeta_prime_2: return "r4_zeta_prime_2";
        case Representation::r5_hyperfactorial: return "r5_hyperfactorial";
        case Representation::r6_hypergeometric_series: return "r6_hypergeometric_series";
    }
    return "?";
}

inline std::optional<Representation> parse_representation(std::string_view s) {
    if (s == "r1" || s == "r1_zeta_prime_neg1") return Representation::r1_zeta_prime_neg1;
    if (s == "r2" || s == "r2_glaisher_product") return Representation::r2_glaisher_product;
    if (s == "r3" || s == "r3_ci_series") return Representation::r3_ci_series;
    if (s == "r4" || s == "r4_zeta_prime_2") return Representation::r4_zeta_prime_2;
    if (s == "r5" || s == "r5_hyperfactorial") return Representation::r5_hyperfactorial;
    if (s == "r6" || s == "r6_hypergeometric_series")
        return Representation::r6_hypergeometric_series;
    return std::nullopt;
}

// How the hypergeometric series terms are built: verbatim coefficients, or
// rebuilt from the quadrature-verified building blocks.
enum class Series2Mode { paper, reconciled };

inline const char* to_string(Series2Mode m) {
    return m == Series2Mode::paper ? "paper" : "reconciled";
}

inline std::optional<Series2Mode> parse_series2_mode(std::string_view s) {
    if (s == "paper") return Series2Mode::paper;
    if (s == "reconciled") return Series2Mode::reconciled;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// R2 -- the reference route. ln A = ln(2)/36 + ln(pi)/6 + (-gamma/4 + s)/3 with
//   s = sum_{r>=2} (-1/2)^r (2^r - 1) zeta(r) / (1 + r).
// The raw terms behave like (-1)^r/(r+1) (zeta(r) -> 1), so the n = 1 part of
// each zeta value is peeled off and summed in closed form,
//   sum_{r>=2} (-1)^r/(r+1) (1 - 2^-r) = 3 ln 2 - 2 ln 3 + 1/4,
// leaving terms (1 - 2^-r)(zeta(r) - 1)/(r+1) ~ 2^-r, a genuinely geometric
// tail; the sweep stops once a term drops below 2^-(precision_bits + 8).
// ---------------------------------------------------------------------------

namespace detail {

// One term of the accelerated s-series at working precision.
inline BigReal r2_s_term(unsigned long r, prec_t target_bits, prec_t wp) {
    BigReal zm1 = zeta_int_bits(r, target_bits + 16, wp) - 1L;
    BigReal coeff = (BigReal::of(1L, wp) - pow2(-static_cast<long>(r), wp)) /
                    static_cast<long>(r + 1);
    BigReal t = coeff * zm1;
    return (r % 2 == 0) ? t : -t;
}

} // namespace detail

inline SeriesResult ln_a_reference_series(prec_t precision_bits) {
    if (precision_bits < 128)
        throw domain_error("ln_a_reference requires precision_bits >= 128");
    const prec_t wp = clamp_precision(precision_bits + 48);
    const long stop_exp = -static_cast<long>(precision_bits) - 8;

    BigReal ln2 = const_ln2(wp);
    BigReal ln3 = log(BigReal::of(3L, wp));
    BigReal s = 3L * ln2 - 2L * ln3 + BigReal::ratio(1, 4, wp);
    unsigned long r = 2;
    for (;; ++r) {
        BigReal t = detail::r2_s_term(r, precision_bits, wp);
        s += t;
        if (t.is_zero() || t.exponent2() < stop_exp) break;
        if (r > static_cast<unsigned long>(wp) + 64)
            throw precision_error("ln_a_reference series failed to terminate", wp);
    }

    BigReal lnpi = log(const_pi(wp));
    BigReal gamma = const_euler_gamma(wp);
    BigReal value = ln2 / 36L + lnpi / 6L + (s - gamma / 4L) / 3L;

    // geometric ratio ~ 1/2: tail <= 2 |first omitted term| <= 2^(stop_exp+1)
    BigReal tail = pow2(stop_exp + 1, kMinPrecision);
    return SeriesResult(value.rounded_to(precision_bits), r - 1, tail, true);
}

inline BigReal ln_a_reference(prec_t precision_bits) {
    return ln_a_reference_series(precision_bits).value;
}

// ---------------------------------------------------------------------------
// R1: ln A = 1/12 - zeta'(-1), zeta'(-1) evaluated by the I3 quadrature.
// ---------------------------------------------------------------------------

inline SeriesResult ln_a_r1_series(const QuadratureConfig& cfg = {}) {
    ApostolDiagnostics diag;
    BigReal zp = zeta_prime_apostol(BigReal::of(-1L, cfg.precision_bits), cfg, &diag);
    BigReal value = BigReal::ratio(1, 12, clamp_precision(cfg.precision_bits + 16)) - zp;
    return SeriesResult(value.rounded_to(cfg.precision_bits), cfg.intervals,
                        diag.error_bound, true);
}

inline BigReal ln_a_r1(const QuadratureConfig& cfg = {}) {
    return ln_a_r1_series(cfg).value;
}

// ---------------------------------------------------------------------------
// R3: ln A = 1/4 [1 + (2/pi^2) sum_{k>=1} Ci(2 k pi)/k^2]. Every term is
// negative (Ci(2 k pi) = -g(2 k pi) < 0), so the estimates decrease in K. The
// tail bound uses |Ci(2 k pi)| <= 2/(2 k pi)^2 (leading asymptotic term with a
// factor-2 safety margin).
// ---------------------------------------------------------------------------

// Truncation envelope: sum_{k>K} 2/((2 pi)^2 k^2) / (2 pi^2 k^2) summed with
// an integral bound.
inline double ln_a_r3_tail_envelope(unsigned long terms) {
    const double K = static_cast<double>(terms);
    return (1.0 / (4.0 * 97.40909103400243)) / (3.0 * K * K * K) * (1.0 + 2.0 / K);
}

inline SeriesResult ln_a_r3(unsigned long terms, double tol, prec_t precision_bits = 256) {
    if (terms < 1) throw domain_error("ln_a_r3 requires at least one term");
    if (!(tol > 0.0)) throw domain_error("ln_a_r3 requires tol > 0");
    const prec_t wp = clamp_precision(std::max(precision_bits, bits_for_tolerance(tol)) + 48);
    const double term_tol = std::min(tol * 0.25, 1e-18);

    BigReal sum = BigReal::zero(wp);
    for (unsigned long k = 1; k <= terms; ++k)
        sum += ci_at_2kpi(k, term_tol).rounded_to(wp) / static_cast<long>(k * k);

    BigReal pi2 = const_pi(wp);
    pi2 *= pi2;
    BigReal value = (1UL + ldexp2(sum, 1) / pi2) / 4UL;

    const double bound = ln_a_r3_tail_envelope(terms) + term_tol / 12.0;
    return SeriesResult(value.rounded_to(precision_bits), terms,
                        BigReal::of(bound, kMinPrecision), bound <= tol);
}

// ---------------------------------------------------------------------------
// R4: ln A = ln(2 pi)/12 + gamma/12 - zeta'(2)/(2 pi^2), zeta'(2) from the
// direct Dirichlet series at tolerance tol * pi^2 (so the route error <= tol).
// ---------------------------------------------------------------------------

inline SeriesResult ln_a_r4_series(double tol, prec_t precision_bits = 256) {
    if (!(tol > 0.0)) throw domain_error("ln_a_r4 requires tol > 0");
    const prec_t wp = clamp_precision(std::max(precision_bits, bits_for_tolerance(tol)) + 48);
    SeriesResult zp2 = zeta_prime_direct(BigReal::of(2L, wp), tol * 9.8696044, 0);
    BigReal pi2 = const_pi(wp);
    pi2 *= pi2;
    BigReal value = const_ln_2pi(wp) / 12L + const_euler_gamma(wp) / 12L -
                    zp2.value.rounded_to(wp) / ldexp2(pi2, 1);
    return SeriesResult(value.rounded_to(precision_bits), zp2.terms_used,
                        BigReal::of(tol, kMinPrecision), zp2.converged);
}

inline BigReal ln_a_r4(double tol, prec_t precision_bits = 256) {
    return ln_a_r4_series(tol, precision_bits).value;
}

// ---------------------------------------------------------------------------
// R5: the defining limit, entirely in log space (the hyperfactorial H(n) has
// millions of digits long before the error is interesting):
//   ln A ~ sum_{k<=n} k ln k - (n^2/2 + n/2 + 1/12) ln n + n^2/4,
// approached like 1/(720 n^2).
// ---------------------------------------------------------------------------

inline BigReal ln_a_r5(unsigned long n, prec_t precision_bits = 256) {
    if (n < 1) throw domain_error("ln_a_r5 requires n >= 1");
    const prec_t wp = clamp_precision(precision_bits + 64);

    BigReal sum = BigReal::zero(wp);
    for (unsigned long k = 2; k <= n; ++k)
        sum += log(BigReal::of(static_cast<long>(k), wp)) * k;

    BigReal nb = BigReal::of(static_cast<long>(n), wp);
    BigReal coeff = ldexp2(nb * nb + nb, -1) + BigReal::ratio(1, 12, wp);
    BigReal value = sum - coeff * log(nb) + ldexp2(nb * nb, -2);
    return value.rounded_to(precision_bits);
}

// Heuristic error envelope for R5 (leading asymptotic correction, doubled).
inline double ln_a_r5_error_envelope(unsigned long n) {
    return 1.0 / (360.0 * static_cast<double>(n) * static_cast<double>(n));
}

inline SeriesResult ln_a_r5_series(unsigned long n, prec_t precision_bits = 256) {
    return SeriesResult(ln_a_r5(n, precision_bits), n,
                        BigReal::of(ln_a_r5_error_envelope(n), kMinPrecision), true);
}

// ---------------------------------------------------------------------------
// R6 -- the hypergeometric route. Writing F1(k) = 1F2(-1/2; 1/2, 5/2; -k^2 pi^2)
// and F2(k) = 2F3(-1/2, -1/2; 1/2, 1/2, 5/2; -k^2 pi^2):
//
//  paper mode sums the published series with its coefficients taken verbatim,
//    P_k = k(gamma - 1) + 13/(12 pi^2) (1/(2 pi^2 k^2) - 1)
//        + 8/(9 pi^2) (F1 + 3 F2) + k ln(2 pi k) - 13 k/(6 pi) Si(2 k pi);
//
//  reconciled mode rebuilds the two tail integrals from their verified closed
//  forms (see identities.hpp for the adjudication),
//    t_k = [k(1 - 2 k^2 pi^2) + 2 k^4 pi^3 (pi - 2 Si(2 k pi))] / (4 pi^2 k^3)
//    u_k = [3 k pi^2 (-25 + 12 (gamma + ln(2 pi k))) + 32 F1 + 96 F2] / 72,
//  assembles zeta'(2) = -11/12 - 4 sum u_k - 13/3 sum t_k and feeds it through
//  the R4 formula. Two discrepancies in the circulating intermediate forms are
//  settled by the identity harness: the constant is -11/12 (not +11/12), and
//  u_k carries 96 F2 where the intermediate closed form circulates with 24 F2.
//  The final series itself already uses the corrected values, so both modes
//  agree term by term; the per-term delta is recorded as the adjudication.
//
// Individual pieces grow like k ln k and cancel to O(k^-4); each F evaluation
// additionally cancels internally to exp(2 k pi), handled by the hyp_pfq
// precision policy. Escalation is capped at k = 200 (~1850 extra bits).
// ---------------------------------------------------------------------------

struct R6Diagnostics {
    BigReal zeta_prime_2_internal;
    BigReal paper_value;
    BigReal reconciled_value;
    double max_term_delta = 0.0;
    unsigned long max_delta_k = 0;
    std::string notes;
    IdentityReport adjudication; // verbatim coefficients vs reconciled assembly

    R6Diagnostics()
        : zeta_prime_2_internal(kMinPrecision),
          paper_value(kMinPrecision),
          reconciled_value(kMinPrecision) {}
};

inline constexpr unsigned long kR6EscalationCap = 200;

// Truncation envelope for the R6 term sequence (dominated by the Si part,
// ~ 13/(8 pi^6 k^4), with a 4x safety margin).
inline double ln_a_r6_tail_envelope(unsigned long terms) {
    const double K = static_cast<double>(terms);
    return 6.8e-3 / (3.0 * K * K * K);
}

inline SeriesResult ln_a_r6(unsigned long terms, Series2Mode mode, double tol,
                            prec_t precision_bits = 256, R6Diagnostics* diag = nullptr) {
    if (terms < 1) throw domain_error("ln_a_r6 requires at least one term");
    if (!(tol > 0.0)) throw domain_error("ln_a_r6 requires tol > 0");
    if (terms > kR6EscalationCap)
        throw precision_error("ln_a_r6 per-term escalation capped at k = 200; requested k = " +
                                  std::to_string(terms),
                              static_cast<long>(2.0 * M_PI * 1.4427 * static_cast<double>(terms)) + 64);

    const prec_t wp = clamp_precision(std::max(precision_bits, bits_for_tolerance(tol)) + 64);
    const double term_tol = tol / (4.0 * static_cast<double>(terms));

    const BigReal pi = const_pi(wp);
    const BigReal pi2 = pi * pi;
    const BigReal pi3 = pi2 * pi;
    const BigReal gamma = const_euler_gamma(wp);
    const BigReal ln2pi = const_ln_2pi(wp);

    const std::vector<Rational> a_1f2 = {{-1, 2}};
    const std::vector<Rational> b_1f2 = {{1, 2}, {5, 2}};
    const std::vector<Rational> a_2f3 = {{-1, 2}, {-1, 2}};
    const std::vector<Rational> b_2f3 = {{1, 2}, {1, 2}, {5, 2}};

    BigReal sum_t = BigReal::zero(wp);
    BigReal sum_u = BigReal::zero(wp);
    BigReal sum_paper = BigReal::zero(wp);
    double max_delta = 0.0;
    unsigned long max_delta_k = 0;
    BigReal last_paper_term(wp);

    for (unsigned long k = 1; k <= terms; ++k) {
        const double kd = static_cast<double>(k);
        const long kl = static_cast<long>(k);

        const double si_tol = term_tol / (2.0 * (0.69 * kd + 1.0));
        const double f_tol = term_tol / 2.0;

        const prec_t x_bits =
            clamp_precision(bits_for_tolerance(f_tol) +
                            static_cast<prec_t>(std::ceil(2.0 * kd * M_PI * 1.4426950409)) + 48);
        BigReal pix = const_pi(x_bits) * k;
        BigReal x = -(pix * pix);
        BigReal f1 = hyp_pfq(a_1f2, b_1f2, x, f_tol).rounded_to(wp);
        BigReal f2 = hyp_pfq(a_2f3, b_2f3, x, f_tol).rounded_to(wp);

        BigReal zk = ldexp2(const_pi(clamp_precision(wp + 16)), 1) * k;
        BigReal sik = si(zk, si_tol).rounded_to(wp);
        BigReal ln2pik = ln2pi + log(BigReal::of(kl, wp));

        // verified closed forms of the two tail integrals, divided by k^3
        BigReal t_k = ((1L - 2L * kl * kl * pi2) * kl +
                       2L * (kl * kl) * (kl * kl) * pi3 * (pi - ldexp2(sik, 1))) /
                      (4L * pi2 * (kl * kl * kl));
        BigReal u_k = (3L * kl * pi2 * (12L * (gamma + ln2pik) - 25L) + 32L * f1 + 96L * f2) / 72L;
        sum_t += t_k;
        sum_u += u_k;

        // boxed-series term, assembled verbatim
        BigReal p_k = (gamma - 1L) * kl +
                      BigReal::ratio(13, 12, wp) / pi2 *
                          (1UL / (ldexp2(pi2, 1) * (kl * kl)) - 1L) +
                      BigReal::ratio(8, 9, wp) / pi2 * (f1 + 3L * f2) + ln2pik * kl -
                      BigReal::ratio(13, 6, wp) * kl / pi * sik;
        sum_paper += p_k;
        last_paper_term = p_k;

        BigReal r_k = ldexp2(u_k, 1) / pi2 + BigReal::ratio(13, 6, wp) / pi2 * t_k;
        double delta = abs(p_k - r_k).to_double();
        if (delta >= max_delta) {
            max_delta = delta;
            max_delta_k = k;
        }
    }

    BigReal zp2_internal = BigReal::ratio(-11, 12, wp) - 4L * sum_u -
                           BigReal::ratio(13, 3, wp) * sum_t;
    BigReal reconciled = ln2pi / 12L + gamma / 12L - zp2_internal / ldexp2(pi2, 1);
    BigReal paper = (ln2pi + gamma + BigReal::ratio(11, 2, wp) / pi2) / 12L + sum_paper;

    const double K = static_cast<double>(terms);
    const double envelope_tail = ln_a_r6_tail_envelope(terms);
    const double bound = envelope_tail + K * term_tol;
    const bool stabilized =
        std::abs(last_paper_term.to_double()) <= std::max(term_tol * 8.0, envelope_tail * 8.0);
    const bool ok = bound <= tol && stabilized;

    char buf[160];
    if (!stabilized)
        std::snprintf(buf, sizeof buf, "series terms failed to stabilize; last |term| = %.3e",
                      std::abs(last_paper_term.to_double()));
    else
        std::snprintf(buf, sizeof buf,
                      "term coefficients confirmed against reconciled assembly; "
                      "max per-term delta = %.3e at k = %lu",
                      max_delta, max_delta_k);
    std::string note(buf);

    if (diag != nullptr) {
        diag->zeta_prime_2_internal = zp2_internal.rounded_to(precision_bits);
        diag->paper_value = paper.rounded_to(precision_bits);
        diag->reconciled_value = reconciled.rounded_to(precision_bits);
        diag->max_term_delta = max_delta;
        diag->max_delta_k = max_delta_k;
        diag->notes = note;
        diag->adjudication.identity_name = "r6_series_coefficients";
        diag->adjudication.k_or_s = terms;
        diag->adjudication.lhs = diag->paper_value;
        diag->adjudication.rhs = diag->reconciled_value;
        diag->adjudication.rel_error =
            abs((paper - reconciled) / reconciled).to_double();
        diag->adjudication.threshold = tol;
        diag->adjudication.match = stabilized && diag->adjudication.rel_error <= tol;
        diag->adjudication.notes = note;
    }

    BigReal value = (mode == Series2Mode::paper ? paper : reconciled);
    return SeriesResult(value.rounded_to(precision_bits), terms,
                        BigReal::of(bound, kMinPrecision), ok, note);
}

} // namespace glaisher

#endif
