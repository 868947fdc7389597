#ifndef GLAISHER_OSCILLATORY_HPP
#define GLAISHER_OSCILLATORY_HPP

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "glaisher/bigreal.hpp"
#include "glaisher/errors.hpp"
#include "glaisher/gauss_legendre.hpp"

namespace glaisher {

// Result of an oscillatory tail integral int_start^inf f(x) dx where f changes
// sign once per half period. tail_estimate is heuristic (last acceleration
// increment, doubled); the cell sums themselves are alternating, so the
// unaccelerated remainder is bounded by the first omitted cell.
struct OscillatoryResult {
    BigReal value;
    BigReal tail_estimate;
    unsigned long direct_cells = 0;
    unsigned euler_terms = 0;
    bool converged = false;

    OscillatoryResult() : value(kMinPrecision), tail_estimate(kMinPrecision) {}
};

// Integrates f over [start, inf) by Gauss quadrature on half-period cells
// [start + j h, start + (j+1) h]. The first `direct` cells are summed plainly
// in ascending order; the alternating remainder is Euler-transformed:
//   sum_{i>=0} (-1)^i a_i = sum_{m>=0} (-1)^m (Delta^m a)_0 / 2^(m+1).
// Cells must start on a zero of the oscillation so that cell signs alternate
// strictly once |f|'s envelope is monotone; `direct` has to cover any initial
// non-monotone stretch.
inline OscillatoryResult integrate_oscillatory_tail(
    const BigReal& start, const BigReal& half_period,
    const std::function<BigReal(const BigReal&)>& f, double tol, prec_t wp,
    unsigned gl_order = 16, unsigned long direct = 32, unsigned euler_terms = 48) {
    if (!(tol > 0.0)) throw domain_error("oscillatory integral requires tol > 0");
    auto rule = gauss_legendre(gl_order, wp);

    auto cell = [&](unsigned long j) {
        BigReal a = start + half_period * j;
        BigReal sum = BigReal::zero(wp);
        for (unsigned i = 0; i < gl_order; ++i)
            sum += rule->weights[i] * f(a + half_period * rule->nodes[i]);
        return sum * half_period;
    };

    const long theta_exp = std::lround(std::log2(tol)) - 4;

    OscillatoryResult out;
    for (int attempt = 0; attempt < 4; ++attempt) {
        BigReal acc = BigReal::zero(wp);
        for (unsigned long j = 0; j < direct; ++j) acc += cell(j);

        // Euler transform of the alternating remainder
        std::vector<BigReal> delta;
        delta.reserve(euler_terms);
        int lead_sign = 0;
        bool alternating = true;
        for (unsigned i = 0; i < euler_terms; ++i) {
            BigReal c = cell(direct + i);
            int s = c.sign();
            if (i == 0) lead_sign = s;
            else if (s != 0 && s == ((i % 2 == 0) ? -lead_sign : lead_sign) && !c.is_zero())
                alternating = false; // sign pattern broken, need more direct cells
            delta.push_back((i % 2 == 0) ? c : -c); // a_i with common sign factored out
        }

        BigReal tail = BigReal::zero(wp);
        BigReal last_term(kMinPrecision);
        bool settled = false;
        if (alternating) {
            unsigned live = euler_terms;
            for (unsigned m = 0; m < euler_terms && live > 0; ++m) {
                BigReal term = ldexp2(delta[0], -static_cast<long>(m) - 1);
                tail += (m % 2 == 0) ? term : -term;
                last_term = abs(term).rounded_to(kMinPrecision);
                if (term.is_zero() || term.exponent2() < theta_exp) {
                    settled = true;
                    break;
                }
                --live;
                for (unsigned i = 0; i < live; ++i) delta[i] = delta[i + 1] - delta[i];
            }
        }

        if (settled) {
            out.value = acc + tail;
            out.tail_estimate = ldexp2(last_term, 1);
            out.direct_cells = direct;
            out.euler_terms = euler_terms;
            out.converged = true;
            return out;
        }
        out.value = acc + tail;
        out.tail_estimate = ldexp2(last_term, 1);
        out.direct_cells = direct;
        out.euler_terms = euler_terms;
        direct *= 2;
        euler_terms += 16;
    }
    out.converged = false;
    return out;
}

// int_1^inf sin(2 k pi x) w(x) dx with w smooth, positive and eventually
// decreasing. Cells start at x = 1, a zero of sin(2 k pi x); the angle is
// reduced mod 1 before the sine so no large-argument bits are lost.
inline OscillatoryResult integrate_sin_tail(
    unsigned long k, const std::function<BigReal(const BigReal&)>& weight,
    double tol, prec_t prec_bits, unsigned gl_order = 16) {
    if (k < 1) throw domain_error("integrate_sin_tail requires k >= 1");
    const prec_t wp = clamp_precision(prec_bits + 96);
    const BigReal two_pi = ldexp2(const_pi(wp), 1);
    auto f = [&, k](const BigReal& x) {
        BigReal angle = two_pi * frac_part(x * k);
        return sin(angle) * weight(x);
    };
    BigReal one = BigReal::of(1L, wp);
    BigReal h = BigReal::ratio(1, 2, wp) / static_cast<long>(k);
    const unsigned long direct = std::max<unsigned long>(32, 4 * k);
    return integrate_oscillatory_tail(one, h, f, tol, wp, gl_order, direct);
}

} // namespace glaisher

#endif
