#include <doctest.h>

#include "support.hpp"

using namespace glaisher;
using gtest_support::lit;
using gtest_support::within_abs;
using gtest_support::within_exp2;

TEST_CASE("reference route against frozen digits") {
    auto ref = ln_a_reference_series(256);
    CHECK(ref.converged);
    CHECK(within_abs(ref.value, lit(gtest_support::kLnA, 320), 1e-70));
    CHECK_THROWS_AS(ln_a_reference(100), domain_error);
}

TEST_CASE("reference closes the zeta'(2) relation") {
    // (12 ln A - gamma - ln 2 pi) pi^2/6 = -zeta'(2)
    const prec_t wp = 256;
    BigReal lhs = (12L * ln_a_reference(wp) - const_euler_gamma(wp) - const_ln_2pi(wp)) *
                  pow_si(const_pi(wp), 2) / 6L;
    auto oracle = zeta_prime_direct(2.0, 1e-12);
    CHECK(within_abs(lhs, -oracle.value, 2e-12));
}

TEST_CASE("accelerated s-series tail is geometrically enveloped") {
    const prec_t wp = 256;
    // long run as the limit
    BigReal s_limit = BigReal::zero(wp);
    for (unsigned long r = 2; r <= 300; ++r) s_limit += detail::r2_s_term(r, 200, wp);
    BigReal partial = BigReal::zero(wp);
    for (unsigned long r = 2; r <= 40; ++r) {
        partial += detail::r2_s_term(r, 200, wp);
        BigReal next = detail::r2_s_term(r + 1, 200, wp);
        // |s - S_R| <= |term_{R+1}| / (1 - 1/2)
        CHECK(abs(s_limit - partial) <= ldexp2(abs(next), 1) + pow2(-180, 64));
    }
}

TEST_CASE("r1 tracks the reference within quadrature accuracy") {
    QuadratureConfig cfg;
    cfg.intervals = 10000;
    cfg.precision_bits = 256;
    auto r1 = ln_a_r1_series(cfg);
    BigReal ref = ln_a_reference(256);
    CHECK(within_abs(r1.value, ref, 1e-8));

    // the published envelope must also cover a coarse run
    QuadratureConfig coarse = cfg;
    coarse.intervals = 100;
    auto r1c = ln_a_r1_series(coarse);
    CHECK(within_abs(r1c.value, ref, r1c.tail_bound));
}

TEST_CASE("r1 is literally 1/12 minus the quadrature zeta'(-1)") {
    QuadratureConfig cfg;
    cfg.intervals = 500;
    cfg.precision_bits = 192;
    BigReal expect = (BigReal::ratio(1, 12, 192 + 16) -
                      ((i3(-1.0, cfg).value - 1L) / 6L).rounded_to(192))
                         .rounded_to(192);
    CHECK(ln_a_r1(cfg) == expect);
}

TEST_CASE("r3 against the reference with honest envelopes") {
    BigReal ref = ln_a_reference(256);
    for (unsigned long K : {10UL, 100UL, 1000UL}) {
        auto r3 = ln_a_r3(K, 1e-10, 256);
        CHECK(within_abs(r3.value, ref, r3.tail_bound));
    }
    auto r3 = ln_a_r3(100, 1e-8, 256);
    CHECK(r3.converged);
    CHECK(within_abs(r3.value, ref, 1e-8));
}

TEST_CASE("r3 single-term instantiation") {
    auto r3 = ln_a_r3(1, 1e-2, 256);
    const prec_t wp = 256 + 48;
    BigReal manual =
        (1UL + ldexp2(ci_at_2kpi(1, 2.5e-3).rounded_to(wp), 1) / pow_si(const_pi(wp), 2)) / 4UL;
    CHECK(within_abs(r3.value, manual, 1e-25));
}

TEST_CASE("r3 estimates decrease monotonically in K") {
    const prec_t wp = 304;
    BigReal sum = BigReal::zero(wp);
    BigReal pi2 = pow_si(const_pi(wp), 2);
    BigReal prev(wp);
    for (unsigned long k = 1; k <= 200; ++k) {
        sum += ci_at_2kpi(k, 1e-20).rounded_to(wp) / static_cast<long>(k * k);
        BigReal estimate = (1UL + ldexp2(sum, 1) / pi2) / 4UL;
        if (k > 1) CHECK(estimate < prev);
        prev = estimate;
    }
}

TEST_CASE("r4 against the reference and the Apostol substitution") {
    BigReal ref = ln_a_reference(256);
    BigReal r4 = ln_a_r4(1e-12, 256);
    CHECK(within_abs(r4, ref, 2e-12));

    // substituting the quadrature zeta'(2)
    QuadratureConfig cfg;
    cfg.intervals = 2000;
    cfg.precision_bits = 256;
    ApostolDiagnostics diag;
    BigReal z2 = zeta_prime_apostol(BigReal::of(2L, 256), cfg, &diag);
    const prec_t wp = 304;
    BigReal pi2 = pow_si(const_pi(wp), 2);
    BigReal substituted =
        const_ln_2pi(wp) / 12L + const_euler_gamma(wp) / 12L - z2.rounded_to(wp) / ldexp2(pi2, 1);
    CHECK(within_abs(substituted, ref, diag.error_bound + BigReal::of(1e-7, 64)));

    // algebraic closure against r1
    QuadratureConfig r1cfg;
    r1cfg.intervals = 10000;
    r1cfg.precision_bits = 256;
    auto r1 = ln_a_r1_series(r1cfg);
    CHECK(within_abs(r4, r1.value, r1.tail_bound + BigReal::of(1e-12, 64)));
}

TEST_CASE("r5 exact at n = 1 and converging at rate 1/n^2") {
    CHECK(ln_a_r5(1, 128) == BigReal::ratio(1, 4, 128));
    CHECK_THROWS_AS(ln_a_r5(0, 128), domain_error);

    BigReal ref = ln_a_reference(256);
    double e500 = abs(ln_a_r5(500, 256) - ref).to_double();
    double e1000 = abs(ln_a_r5(1000, 256) - ref).to_double();
    CHECK(e1000 < 1e-8);
    CHECK(e500 / e1000 >= 3.0);
    CHECK(e500 / e1000 <= 5.0);

    double prev = 1.0;
    for (unsigned long n : {100UL, 200UL, 400UL, 800UL}) {
        double err = abs(ln_a_r5(n, 256) - ref).to_double();
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("r6 reconciled pipeline and adjudication diagnostics") {
    BigReal ref = ln_a_reference(256);
    R6Diagnostics diag;
    auto r6 = ln_a_r6(12, Series2Mode::reconciled, 1e-4, 256, &diag);
    CHECK(within_abs(r6.value, ref, ln_a_r6_tail_envelope(12)));
    CHECK(r6.converged);

    // the verbatim boxed series and the reconciled assembly agree term by term
    CHECK(within_abs(diag.paper_value, diag.reconciled_value, 1e-40));
    CHECK(diag.max_term_delta < 1e-40);

    // internal zeta'(2) consistent with the direct oracle
    auto direct = zeta_prime_direct(2.0, 1e-12);
    double zeta_budget = (13.0 / 3.0) * 2.0 * 0.0077 / (3.0 * 12.0 * 12.0 * 12.0) + 1e-10;
    CHECK(within_abs(diag.zeta_prime_2_internal, direct.value, zeta_budget));
}

TEST_CASE("r6 paper mode reports a stabilization verdict instead of crashing") {
    auto r6 = ln_a_r6(8, Series2Mode::paper, 1e-3, 192);
    CHECK_FALSE(r6.note.empty());
    CHECK(r6.terms_used == 8);
    BigReal ref = ln_a_reference(192);
    CHECK(within_abs(r6.value, ref, ln_a_r6_tail_envelope(8)));
}

TEST_CASE("r6 escalation cap raises precision_error naming k") {
    try {
        ln_a_r6(201, Series2Mode::reconciled, 1e-6, 128);
        FAIL("expected precision_error");
    } catch (const precision_error& e) {
        CHECK(std::string(e.what()).find("201") != std::string::npos);
    }
}

TEST_CASE("cross-route agreement within combined bounds") {
    auto ref = ln_a_reference_series(256);
    QuadratureConfig cfg;
    cfg.intervals = 10000;
    cfg.precision_bits = 256;
    auto r1 = ln_a_r1_series(cfg);
    auto r3 = ln_a_r3(10000, 1e-10, 256);
    BigReal r4 = ln_a_r4(1e-12, 256);
    BigReal r4_bound = BigReal::of(1e-12, 64);

    struct Row {
        BigReal value;
        BigReal bound;
    };
    std::vector<Row> rows = {{ref.value, ref.tail_bound},
                             {r1.value, r1.tail_bound},
                             {r3.value, r3.tail_bound},
                             {r4, r4_bound}};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            CHECK(within_abs(rows[i].value, rows[j].value, rows[i].bound + rows[j].bound));
}

TEST_CASE("representation tag round-trip") {
    for (auto rep : {Representation::r1_zeta_prime_neg1, Representation::r2_glaisher_product,
                     Representation::r3_ci_series, Representation::r4_zeta_prime_2,
                     Representation::r5_hyperfactorial, Representation::r6_hypergeometric_series})
        CHECK(parse_representation(to_string(rep)) == rep);
    CHECK(parse_representation("r3") == Representation::r3_ci_series);
    CHECK_FALSE(parse_representation("r7").has_value());
    CHECK(parse_series2_mode("paper") == Series2Mode::paper);
    CHECK_FALSE(parse_series2_mode("verbatim").has_value());
}
