#ifndef GLAISHER_ZETA_HPP
#define GLAISHER_ZETA_HPP

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "glaisher/bigreal.hpp"
#include "glaisher/constants.hpp"
#include "glaisher/errors.hpp"
#include "glaisher/gauss_legendre.hpp"
#include "glaisher/series_result.hpp"
#include "glaisher/special_functions.hpp"

namespace glaisher {

// ---------------------------------------------------------------------------
// Quadrature of I3(s) = int_1^inf P3(x) x^-(s+3) dx and its log-weighted
// companion I3'(s) = -int_1^inf P3(x) x^-(s+3) ln x dx.
//
// P3 restricted to a unit interval [n, n+1] is a cubic, so the integrand there
// is smooth and a fixed-order Gauss rule converges spectrally per cell. Cells
// are summed in ascending order; the run is bit-reproducible under a fixed
// config. The truncation tail uses the envelope max |P3| = sqrt(3)/36 and is
// finite only for s + 2 > 0.
// ---------------------------------------------------------------------------

struct QuadratureConfig {
    unsigned long intervals = 10000;   // integrate over [1, N+1] as N unit cells
    unsigned nodes_per_interval = 16;  // Gauss-Legendre order per cell
    double tail_exponent_floor = 1.0;  // minimum s + 3 with a finite tail bound
    prec_t precision_bits = 256;

    void validate() const {
        if (intervals < 16) throw domain_error("QuadratureConfig: intervals < 16");
        if (nodes_per_interval < 8)
            throw domain_error("QuadratureConfig: nodes_per_interval < 8");
    }
};

namespace detail {

// max |B3(t)| on [0,1] is sqrt(3)/36, attained at t = 1/2 -+ 1/(2 sqrt 3).
inline BigReal p3_envelope(prec_t bits) {
    return sqrt(BigReal::of(3L, bits)) / 36UL;
}

struct P3Integrals {
    SeriesResult plain;    // I3(s)
    SeriesResult logged;   // I3'(s)
};

// One sweep evaluates either or both integrals on the same nodes.
inline P3Integrals p3_power_integrals(const BigReal& s, const QuadratureConfig& cfg,
                                      bool want_plain, bool want_log) {
    cfg.validate();
    const double sd = s.to_double();
    if (!(sd + 3.0 > cfg.tail_exponent_floor))
        throw domain_error("I3 integral diverges: need s > -2");

    const prec_t wp = clamp_precision(cfg.precision_bits + 48);
    auto rule = gauss_legendre(cfg.nodes_per_interval, wp);

    BigReal sw = s.rounded_to(wp);
    BigReal exponent = sw + 3L;
    const bool integer_power = mpfr_integer_p(s.raw()) != 0 &&
                               mpfr_fits_slong_p(s.raw(), MPFR_RNDN) != 0;
    const long ipow = integer_power ? mpfr_get_si(s.raw(), MPFR_RNDN) + 3 : 0;

    // weight * B3(node) is interval-independent
    const unsigned m = cfg.nodes_per_interval;
    std::vector<BigReal> wb3;
    wb3.reserve(m);
    for (unsigned i = 0; i < m; ++i) {
        const BigReal& t = rule->nodes[i];
        BigReal b3 = ((t - BigReal::ratio(3, 2, wp)) * t + BigReal::ratio(1, 2, wp)) * t;
        wb3.push_back(rule->weights[i] * b3);
    }

    BigReal acc_plain = BigReal::zero(wp);
    BigReal acc_log = BigReal::zero(wp);
    for (unsigned long n = 1; n <= cfg.intervals; ++n) {
        for (unsigned i = 0; i < m; ++i) {
            BigReal x = rule->nodes[i] + n;
            BigReal lx(wp);
            bool have_lx = false;
            BigReal p(wp);
            if (integer_power) {
                p = pow_si(x, -ipow);
            } else {
                lx = log(x);
                have_lx = true;
                p = exp(-(exponent * lx));
            }
            BigReal f = wb3[i] * p;
            if (want_plain) acc_plain += f;
            if (want_log) {
                if (!have_lx) lx = log(x);
                acc_log += f * lx;
            }
        }
    }

    // tails from the envelope: int_T^inf x^-(s+2)-1 dx and its ln-weighted form
    const prec_t bp = kMinPrecision;
    BigReal T = BigReal::of(static_cast<long>(cfg.intervals + 1), bp);
    BigReal sp2 = s.rounded_to(bp) + 2L;
    BigReal envelope = p3_envelope(bp);
    BigReal tpow = exp(-(sp2 * log(T)));  // T^-(s+2)
    BigReal tail_plain = envelope * tpow / sp2;
    BigReal tail_log = envelope * tpow * (log(T) / sp2 + 1UL / (sp2 * sp2));

    P3Integrals out;
    if (want_plain)
        out.plain = SeriesResult(acc_plain.rounded_to(cfg.precision_bits),
                                 cfg.intervals, abs(tail_plain), true);
    if (want_log)
        out.logged = SeriesResult((-acc_log).rounded_to(cfg.precision_bits),
                                  cfg.intervals, abs(tail_log), true);
    return out;
}

} // namespace detail

inline SeriesResult i3(const BigReal& s, const QuadratureConfig& cfg = {}) {
    return detail::p3_power_integrals(s, cfg, true, false).plain;
}

inline SeriesResult i3(double s, const QuadratureConfig& cfg = {}) {
    return i3(BigReal::of(s, cfg.precision_bits), cfg);
}

inline SeriesResult i3_prime(const BigReal& s, const QuadratureConfig& cfg = {}) {
    return detail::p3_power_integrals(s, cfg, false, true).logged;
}

inline SeriesResult i3_prime(double s, const QuadratureConfig& cfg = {}) {
    return i3_prime(BigReal::of(s, cfg.precision_bits), cfg);
}

// ---------------------------------------------------------------------------
// zeta'(x) for x > -2, x != 1, assembled from I3 and I3':
//   zeta'(x) = -1/(x-1)^2 + 1/12 - x(x+1)(x+2)/6 I3'(x) - (3x^2+6x+2)/6 I3(x)
// The cubic prefactor vanishes identically at x = -1 and x = 0, so I3' is not
// evaluated there.
// ---------------------------------------------------------------------------

struct ApostolDiagnostics {
    bool i3_prime_evaluated = false;
    SeriesResult i3_part;
    SeriesResult i3_prime_part;
    BigReal error_bound; // |coeff|-weighted sum of the two quadrature tails

    ApostolDiagnostics() : error_bound(kMinPrecision) {}
};

inline BigReal zeta_prime_apostol(const BigReal& x, const QuadratureConfig& cfg = {},
                                  ApostolDiagnostics* diag = nullptr) {
    cfg.validate();
    if (!(x > -2.0)) throw domain_error("zeta_prime_apostol requires x > -2");
    if (mpfr_cmp_ui(x.raw(), 1) == 0) throw pole_error("zeta_prime_apostol: pole at x = 1");

    // At x = -1 the assembly collapses to zeta'(-1) = (I3(-1) - 1)/6 exactly
    // (pole and constant terms merge, cubic prefactor vanishes); evaluate that
    // reduced form so the identity holds bit for bit.
    if (mpfr_cmp_si(x.raw(), -1) == 0) {
        SeriesResult part = i3(x, cfg);
        if (diag != nullptr) {
            diag->i3_prime_evaluated = false;
            diag->i3_part = part;
            diag->error_bound = part.tail_bound / 6UL;
        }
        return ((part.value - 1L) / 6L).rounded_to(cfg.precision_bits);
    }

    const prec_t wp = clamp_precision(cfg.precision_bits + 48);
    BigReal xw = x.rounded_to(wp);
    BigReal coeff_log = xw * (xw + 1L) * (xw + 2L) / 6L;
    BigReal coeff_plain = ((3L * xw + 6L) * xw + 2L) / 6L;

    const bool need_log = !coeff_log.is_zero();
    detail::P3Integrals parts = detail::p3_power_integrals(x, cfg, true, need_log);

    BigReal one = BigReal::of(1L, wp);
    BigReal value = -(one / ((xw - 1L) * (xw - 1L))) + BigReal::ratio(1, 12, wp) -
                    coeff_plain * parts.plain.value;
    BigReal bound = abs(coeff_plain.rounded_to(kMinPrecision)) * parts.plain.tail_bound;
    if (need_log) {
        value -= coeff_log * parts.logged.value;
        bound += abs(coeff_log.rounded_to(kMinPrecision)) * parts.logged.tail_bound;
    }
    if (diag != nullptr) {
        diag->i3_prime_evaluated = need_log;
        diag->i3_part = parts.plain;
        if (need_log) diag->i3_prime_part = parts.logged;
        diag->error_bound = bound;
    }
    return value.rounded_to(cfg.precision_bits);
}

// ---------------------------------------------------------------------------
// zeta'(s) for s > 1 from the Dirichlet series zeta'(s) = -sum_{k>=2} ln k / k^s,
// with an Euler-Maclaurin tail through the B4 correction. The cutoff M doubles
// until the first omitted correction term (the B6 one) drops below tol/2.
// ---------------------------------------------------------------------------

namespace detail {

// f(x) = x^-s ln x has f^(m)(x) = x^-(s+m) (A_m + B_m ln x) with
// A_{m+1} = -(s+m) A_m + B_m and B_{m+1} = -(s+m) B_m.
inline void log_power_derivative_coeffs(double s, int m, double& a, double& b) {
    a = 0.0;
    b = 1.0;
    for (int j = 0; j < m; ++j) {
        double na = -(s + j) * a + b;
        double nb = -(s + j) * b;
        a = na;
        b = nb;
    }
}

inline double euler_maclaurin_b6_estimate(double s, double m) {
    double a, b;
    log_power_derivative_coeffs(s, 5, a, b);
    double lm = std::log(m);
    return std::abs(std::pow(m, -(s + 5.0)) * (a + b * lm)) / 30240.0;
}

} // namespace detail

inline SeriesResult zeta_prime_direct(const BigReal& s, double tol, prec_t extra_bits = 0) {
    if (!(s > 1.0)) throw domain_error("zeta_prime_direct requires s > 1");
    if (!(tol > 0.0)) throw domain_error("zeta_prime_direct requires tol > 0");
    const double sd = s.to_double();

    unsigned long cutoff = 32;
    while (detail::euler_maclaurin_b6_estimate(sd, static_cast<double>(cutoff)) > tol / 2 &&
           cutoff < (1UL << 30))
        cutoff *= 2;
    const double est = detail::euler_maclaurin_b6_estimate(sd, static_cast<double>(cutoff));

    const prec_t wp = clamp_precision(bits_for_tolerance(tol) + 48 + extra_bits);
    BigReal sw = s.rounded_to(wp);
    const bool integer_power = mpfr_integer_p(s.raw()) != 0 &&
                               mpfr_fits_slong_p(s.raw(), MPFR_RNDN) != 0;
    const long ipow = integer_power ? mpfr_get_si(s.raw(), MPFR_RNDN) : 0;

    BigReal sum = BigReal::zero(wp);
    BigReal lnM(wp), powM(wp);
    for (unsigned long k = 2; k <= cutoff; ++k) {
        BigReal kk = BigReal::of(static_cast<long>(k), wp);
        BigReal lk = log(kk);
        BigReal pk = integer_power ? pow_si(kk, -ipow) : exp(-(sw * lk));
        if (k < cutoff) {
            sum += lk * pk;
        } else {
            lnM = lk;
            powM = pk; // M^-s
        }
    }

    BigReal M = BigReal::of(static_cast<long>(cutoff), wp);
    BigReal sm1 = sw - 1L;
    // int_M^inf x^-s ln x dx = M^(1-s) (ln M/(s-1) + 1/(s-1)^2)
    BigReal integral = powM * M * (lnM / sm1 + 1UL / (sm1 * sm1));
    BigReal fM = lnM * powM;

    // f'(M) and f'''(M) via the coefficient recurrence at working precision
    BigReal a = BigReal::zero(wp), b = BigReal::of(1L, wp);
    BigReal f1(wp), f3(wp);
    BigReal invM = 1UL / M;
    BigReal xpow = powM * invM; // M^-(s+m), m = 1 on entry
    for (int m = 0; m < 3; ++m) {
        BigReal na = -(sw + static_cast<long>(m)) * a + b;
        BigReal nb = -(sw + static_cast<long>(m)) * b;
        a = na;
        b = nb;
        if (m == 0) f1 = xpow * (a + b * lnM);
        if (m == 2) f3 = xpow * (a + b * lnM);
        xpow *= invM;
    }

    BigReal total = sum + integral + ldexp2(fM, -1) - f1 / 12L + f3 / 720L;
    BigReal tail = BigReal::of(2.0 * est, kMinPrecision);
    return SeriesResult((-total).rounded_to(bits_for_tolerance(tol) + 8), cutoff,
                        tail, est <= tol / 2);
}

inline SeriesResult zeta_prime_direct(double s, double tol, prec_t extra_bits = 0) {
    return zeta_prime_direct(BigReal::of(s, bits_for_tolerance(tol) + 8), tol, extra_bits);
}

// ---------------------------------------------------------------------------
// zeta(r) for integer r >= 2 by the alternating-series acceleration of
// P. Borwein (algorithm 2): with d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!),
//   zeta(s) = -1/(d_n (1 - 2^(1-s))) sum_{k=0}^{n-1} (-1)^k (d_k - d_n)/(k+1)^s
// and |error| <= 3 (3 + sqrt 8)^-n / |1 - 2^(1-s)|. Chosen over Euler-Maclaurin
// because one table of d_k serves every r at a given accuracy.
// ---------------------------------------------------------------------------

namespace detail {

struct BorweinTable {
    unsigned long n;
    prec_t bits;                // enough for the d_k exactly (~2.6 n + 64)
    std::vector<BigReal> d;     // d_0 .. d_n
};

inline std::shared_ptr<const BorweinTable> borwein_table(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, std::shared_ptr<const BorweinTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto tab = std::make_shared<BorweinTable>();
    tab->n = n;
    tab->bits = clamp_precision(static_cast<prec_t>(2.6 * static_cast<double>(n)) + 64);

    mpq_t t, d, tmp;
    mpq_inits(t, d, tmp, nullptr);
    mpq_set_ui(t, 1, 1);  // T_0 = n * e_0 = 1
    mpq_set_ui(d, 1, 1);  // d_0 = 1
    tab->d.reserve(n + 1);
    BigReal dk(tab->bits);
    mpfr_set_q(dk.raw(), d, MPFR_RNDN);
    tab->d.push_back(dk);
    for (unsigned long i = 1; i <= n; ++i) {
        // T_i = T_{i-1} * 4 (n+i-1)(n-i+1) / ((2i-1) 2i)
        mpq_set_ui(tmp, 4 * (n + i - 1), (2 * i - 1));
        mpq_canonicalize(tmp);
        mpq_mul(t, t, tmp);
        mpq_set_ui(tmp, (n - i + 1), 2 * i);
        mpq_canonicalize(tmp);
        mpq_mul(t, t, tmp);
        mpq_add(d, d, t);
        BigReal di(tab->bits);
        mpfr_set_q(di.raw(), d, MPFR_RNDN);
        tab->d.push_back(di);
    }
    mpq_clears(t, d, tmp, nullptr);
    cache.emplace(n, tab);
    return tab;
}

inline unsigned long borwein_terms_for_bits(prec_t bits) {
    return static_cast<unsigned long>(std::ceil((static_cast<double>(bits) + 16.0) / 2.5431)) + 6;
}

inline BigReal zeta_int_bits(unsigned long r, prec_t result_bits, prec_t wp) {
    const unsigned long n = borwein_terms_for_bits(result_bits);
    auto tab = borwein_table(n);

    BigReal sum = BigReal::zero(wp);
    for (unsigned long k = 0; k < n; ++k) {
        BigReal pw(wp);
        mpfr_ui_pow_ui(pw.raw(), k + 1, r, MPFR_RNDN);
        BigReal term = (tab->d[k].rounded_to(wp) - tab->d[n].rounded_to(wp)) / pw;
        sum += (k % 2 == 0) ? term : -term;
    }
    // 1 - 2^(1-r) exactly
    BigReal scale = BigReal::of(1L, wp) - pow2(1 - static_cast<long>(r), wp);
    return -(sum / (tab->d[n].rounded_to(wp) * scale));
}

} // namespace detail

inline BigReal zeta_int(unsigned long r, double tol, prec_t extra_bits = 0) {
    if (r < 2) throw domain_error("zeta_int requires r >= 2");
    if (!(tol > 0.0)) throw domain_error("zeta_int requires tol > 0");
    const prec_t rb = bits_for_tolerance(tol) + 8;
    const prec_t wp = clamp_precision(rb + 32 + extra_bits);
    return detail::zeta_int_bits(r, rb, wp).rounded_to(rb);
}

} // namespace glaisher

#endif
