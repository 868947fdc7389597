#ifndef GLAISHER_GAUSS_LEGENDRE_HPP
#define GLAISHER_GAUSS_LEGENDRE_HPP

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "glaisher/bigreal.hpp"

namespace glaisher {

// Gauss-Legendre nodes and weights mapped to [0, 1], computed at the requested
// precision by Newton iteration on the Legendre recurrence. Rules are cached
// per (order, precision) and immutable once built.
struct GaussLegendreRule {
    unsigned order;
    prec_t precision;
    std::vector<BigReal> nodes;   // in (0, 1), ascending
    std::vector<BigReal> weights; // sum to 1
};

namespace detail {

// P_n(x) and P_n'(x) via the three-term recurrence.
inline void legendre_pair(unsigned n, const BigReal& x, prec_t wp,
                          BigReal& p, BigReal& dp) {
    BigReal p0 = BigReal::of(1L, wp);
    BigReal p1 = x.rounded_to(wp);
    for (unsigned j = 2; j <= n; ++j) {
        BigReal p2 = ((2 * j - 1) * (x * p1) - (j - 1) * p0) / static_cast<long>(j);
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    BigReal one = BigReal::of(1L, wp);
    // (1 - x^2) P_n'(x) = n (P_{n-1}(x) - x P_n(x))
    dp = static_cast<long>(n) * (p0 - x * p1) / (one - x * x);
}

inline std::shared_ptr<const GaussLegendreRule> build_rule(unsigned order, prec_t prec) {
    const prec_t wp = clamp_precision(prec + 32);
    const long stop_exp = -static_cast<long>(wp) + 6;
    const unsigned npos = order / 2; // strictly positive roots
    const bool odd = (order % 2) == 1;

    // pos[0] is the largest root, descending toward zero.
    std::vector<BigReal> pos;
    std::vector<BigReal> wpos;
    pos.reserve(npos);
    wpos.reserve(npos);
    for (unsigned i = 1; i <= npos; ++i) {
        BigReal x = BigReal::of(std::cos(M_PI * (i - 0.25) / (order + 0.5)), wp);
        BigReal p(wp), dp(wp);
        for (int it = 0; it < 100; ++it) {
            legendre_pair(order, x, wp, p, dp);
            BigReal dx = p / dp;
            x -= dx;
            if (dx.is_zero() || dx.exponent2() < stop_exp) break;
        }
        legendre_pair(order, x, wp, p, dp);
        BigReal one = BigReal::of(1L, wp);
        pos.push_back(x);
        wpos.push_back(2UL / ((one - x * x) * dp * dp));
    }

    auto rule = std::make_shared<GaussLegendreRule>();
    rule->order = order;
    rule->precision = prec;
    rule->nodes.reserve(order);
    rule->weights.reserve(order);

    auto push = [&](const BigReal& x_psc, const BigReal& w_psc) {
        // map from [-1, 1] to [0, 1]
        rule->nodes.push_back(((1UL + x_psc) / 2UL).rounded_to(prec));
        rule->weights.push_back((w_psc / 2UL).rounded_to(prec));
    };

    for (unsigned i = 0; i < npos; ++i) push(-pos[i], wpos[i]);
    if (odd) {
        BigReal zero = BigReal::of(0L, wp);
        BigReal p(wp), dp(wp);
        legendre_pair(order, zero, wp, p, dp);
        push(zero, 2UL / (dp * dp));
    }
    for (unsigned i = npos; i-- > 0;) push(pos[i], wpos[i]);
    return rule;
}

} // namespace detail

inline std::shared_ptr<const GaussLegendreRule> gauss_legendre(unsigned order, prec_t prec) {
    if (order < 2 || order > 128) throw domain_error("gauss_legendre order out of range");
    static std::mutex mu;
    static std::map<std::pair<unsigned, prec_t>, std::shared_ptr<const GaussLegendreRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(order, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto rule = detail::build_rule(order, prec);
    cache.emplace(key, rule);
    return rule;
}

} // namespace glaisher

#endif
