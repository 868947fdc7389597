// gkconst: compute ln A (logarithm of the Glaisher-Kinkelin constant) through
// six independent routes, trace their convergence, compare them against the
// product-formula reference, and adjudicate the closed-form identities the
// series routes are built from.
//
// Exit codes: 0 ok / all match, 1 internal error, 2 a requested computation
// did not converge (or routes disagree in `compare`), 3 a verified identity
// mismatched, 64 usage error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glaisher/glaisher.hpp"

namespace gk = glaisher;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitUsage = 64;

struct Options {
    long precision_bits = 128;
    unsigned long max_terms = 10000;
    double tolerance = 1e-10;
    unsigned long intervals = 10000;
    std::string format = "text";
    std::string series2_mode = "reconciled";
    unsigned long n = 1000;
    unsigned long k_min = 1;
    unsigned long k_max = 8;
    std::string out_path;
    bool timing = false;
    bool tol_explicit = false;
    bool max_terms_explicit = false;
};

long env_precision_default() {
    const char* env = std::getenv("GK_PRECISION_BITS");
    if (env == nullptr) return 128;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) return 128;
    return v;
}

std::size_t digits_claimed(long precision_bits) {
    long d = static_cast<long>(std::floor(precision_bits * 0.30102999566398)) - 5;
    return d < 2 ? 2 : static_cast<std::size_t>(d);
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--precision", opt.precision_bits,
                    "working precision in bits (env GK_PRECISION_BITS sets the default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-terms", opt.max_terms, "series term budget");
    cmd->add_option("--tol", opt.tolerance, "absolute tolerance (relative for verify)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--intervals", opt.intervals, "quadrature unit intervals");
    cmd->add_option("--format", opt.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--series2-mode", opt.series2_mode, "paper | reconciled")
        ->check(CLI::IsMember({"paper", "reconciled"}));
    cmd->add_option("--out", opt.out_path, "write output to file instead of stdout");
    cmd->add_flag("--timing", opt.timing, "emit real elapsed_ms (off keeps output byte-stable)");
}

struct RouteRun {
    gk::Representation rep;
    gk::SeriesResult result;
    std::string mode; // series2 mode for r6, empty otherwise
    double elapsed_ms = 0.0;
};

gk::QuadratureConfig quad_config(const Options& opt) {
    gk::QuadratureConfig cfg;
    cfg.intervals = opt.intervals;
    cfg.precision_bits = static_cast<gk::prec_t>(opt.precision_bits);
    return cfg;
}

// An explicit --max-terms without an explicit --tol means "give me K terms":
// the accuracy request becomes the route's own truncation envelope, so the
// converged flag reflects the bound the user accepted rather than the default
// tolerance the term budget cannot meet.
double series_tolerance(const Options& opt, double envelope) {
    if (opt.tol_explicit || !opt.max_terms_explicit) return opt.tolerance;
    return std::max(opt.tolerance, 8.0 * envelope);
}

RouteRun run_route(gk::Representation rep, const Options& opt) {
    const auto prec = static_cast<gk::prec_t>(opt.precision_bits);
    RouteRun run;
    run.rep = rep;
    auto t0 = std::chrono::steady_clock::now();
    switch (rep) {
        case gk::Representation::r1_zeta_prime_neg1:
            run.result = gk::ln_a_r1_series(quad_config(opt));
            break;
        case gk::Representation::r2_glaisher_product:
            run.result = gk::ln_a_reference_series(std::max<gk::prec_t>(prec, 128));
            break;
        case gk::Representation::r3_ci_series:
            run.result = gk::ln_a_r3(opt.max_terms,
                                     series_tolerance(opt, gk::ln_a_r3_tail_envelope(opt.max_terms)),
                                     prec);
            break;
        case gk::Representation::r4_zeta_prime_2:
            run.result = gk::ln_a_r4_series(opt.tolerance, prec);
            break;
        case gk::Representation::r5_hyperfactorial:
            run.result = gk::ln_a_r5_series(opt.n, prec);
            break;
        case gk::Representation::r6_hypergeometric_series: {
            unsigned long terms = std::min<unsigned long>(opt.max_terms, gk::kR6EscalationCap);
            auto mode = gk::parse_series2_mode(opt.series2_mode).value();
            run.result = gk::ln_a_r6(
                terms, mode, series_tolerance(opt, gk::ln_a_r6_tail_envelope(terms)), prec);
            if (terms != opt.max_terms)
                run.result.note += "; terms clamped to the k = 200 escalation cap";
            run.mode = opt.series2_mode;
            break;
        }
    }
    run.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

ordered_json route_json(const RouteRun& run, const Options& opt) {
    ordered_json j;
    j["representation"] = gk::to_string(run.rep);
    j["value"] = run.result.value.to_decimal(digits_claimed(opt.precision_bits));
    j["digits_claimed"] = digits_claimed(opt.precision_bits);
    j["terms_used"] = run.result.terms_used;
    j["tail_bound"] = run.result.tail_bound.to_decimal(10, false);
    j["elapsed_ms"] = opt.timing ? run.elapsed_ms : 0.0;
    j["converged"] = run.result.converged;
    j["mode"] = run.mode;
    j["notes"] = run.result.note;
    return j;
}

void route_text(std::ostream& os, const RouteRun& run, const Options& opt) {
    os << gk::to_string(run.rep) << "\n";
    os << "  value       = " << run.result.value.to_decimal(digits_claimed(opt.precision_bits))
       << "\n";
    os << "  digits      = " << digits_claimed(opt.precision_bits) << "\n";
    os << "  terms_used  = " << run.result.terms_used << "\n";
    os << "  tail_bound  = " << run.result.tail_bound.to_decimal(10, false) << "\n";
    if (opt.timing) os << "  elapsed_ms  = " << run.elapsed_ms << "\n";
    os << "  converged   = " << (run.result.converged ? "true" : "false") << "\n";
    if (!run.mode.empty()) os << "  mode        = " << run.mode << "\n";
    if (!run.result.note.empty()) os << "  notes       = " << run.result.note << "\n";
}

int write_output(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
        std::cerr << "gkconst: cannot open " << opt.out_path << "\n";
        return kExitError;
    }
    f << payload;
    return kExitOk;
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const Options& opt, const std::string& rep_arg) {
    std::vector<gk::Representation> reps;
    if (rep_arg == "all") {
        reps = {gk::Representation::r1_zeta_prime_neg1, gk::Representation::r2_glaisher_product,
                gk::Representation::r3_ci_series, gk::Representation::r4_zeta_prime_2,
                gk::Representation::r5_hyperfactorial,
                gk::Representation::r6_hypergeometric_series};
    } else {
        auto r = gk::parse_representation(rep_arg);
        if (!r) {
            std::cerr << "gkconst: unknown representation '" << rep_arg
                      << "' (use r1..r6 or all)\n";
            return kExitUsage;
        }
        reps = {*r};
    }

    bool all_converged = true;
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    for (auto rep : reps) {
        RouteRun run = run_route(rep, opt);
        all_converged = all_converged && run.result.converged;
        if (opt.format == "json")
            arr.push_back(route_json(run, opt));
        else
            route_text(os, run, opt);
    }
    std::string payload;
    if (opt.format == "json")
        payload = (reps.size() == 1 ? arr[0].dump(2) : arr.dump(2)) + "\n";
    else
        payload = os.str();
    int w = write_output(opt, payload);
    if (w != kExitOk) return w;
    return all_converged ? kExitOk : kExitNotConverged;
}

// ---- compare ---------------------------------------------------------------

int cmd_compare(const Options& opt, const std::string& reps_arg) {
    std::vector<gk::Representation> reps;
    std::stringstream ss(reps_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto r = gk::parse_representation(tok);
        if (!r) {
            std::cerr << "gkconst: unknown representation '" << tok << "'\n";
            return kExitUsage;
        }
        reps.push_back(*r);
    }
    if (reps.empty()) {
        std::cerr << "gkconst: --reps needs at least one representation\n";
        return kExitUsage;
    }

    const auto prec = static_cast<gk::prec_t>(std::max<long>(opt.precision_bits, 128));
    gk::SeriesResult ref = gk::ln_a_reference_series(prec);

    bool all_agree = true;
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    os << "reference (r2_glaisher_product) = "
       << ref.value.to_decimal(digits_claimed(opt.precision_bits)) << "\n";
    for (auto rep : reps) {
        RouteRun run = run_route(rep, opt);
        gk::BigReal err = gk::abs(run.result.value - ref.value);
        gk::BigReal budget = run.result.tail_bound + ref.tail_bound;
        bool agree = !run.result.converged || err <= budget;
        // non-converged routes are reported but do not gate the exit code
        if (run.result.converged && err > budget) all_agree = false;
        if (opt.format == "json") {
            ordered_json j = route_json(run, opt);
            j["error_vs_reference"] = err.to_decimal(10, false);
            j["within_bounds"] = agree;
            arr.push_back(j);
        } else {
            os << gk::to_string(run.rep) << ": value "
               << run.result.value.to_decimal(digits_claimed(opt.precision_bits)) << " err "
               << err.to_decimal(6, false) << " bound " << budget.to_decimal(6, false)
               << (agree ? " ok" : " DISAGREE") << (run.result.converged ? "" : " (not converged)")
               << "\n";
        }
    }
    std::string payload = opt.format == "json" ? arr.dump(2) + "\n" : os.str();
    int w = write_output(opt, payload);
    if (w != kExitOk) return w;
    return all_agree ? kExitOk : kExitNotConverged;
}

// ---- convergence -----------------------------------------------------------

int cmd_convergence(const Options& opt, const std::string& rep_arg) {
    auto reppar = gk::parse_representation(rep_arg);
    if (!reppar) {
        std::cerr << "gkconst: unknown representation '" << rep_arg << "'\n";
        return kExitUsage;
    }
    gk::Representation rep = *reppar;
    if (rep == gk::Representation::r1_zeta_prime_neg1 ||
        rep == gk::Representation::r4_zeta_prime_2) {
        std::cerr << "gkconst: " << gk::to_string(rep)
                  << " has no series index; supported: r2, r3, r5, r6\n";
        return kExitUsage;
    }
    if (opt.k_min < 1 || opt.k_min > opt.k_max) {
        std::cerr << "gkconst: empty k range\n";
        return kExitUsage;
    }

    const auto prec = static_cast<gk::prec_t>(opt.precision_bits);
    const gk::prec_t wp = gk::clamp_precision(prec + 48);
    const std::size_t dc = digits_claimed(opt.precision_bits);
    gk::BigReal ref = gk::ln_a_reference(std::max<gk::prec_t>(prec, 128) + 16);

    std::ostringstream os;
    os << "k,partial_sum,increment_abs,error_vs_reference\n";
    auto emit = [&](unsigned long k, const gk::BigReal& estimate, const gk::BigReal& prev) {
        gk::BigReal inc = gk::abs(estimate - prev);
        gk::BigReal err = gk::abs(estimate - ref);
        os << k << "," << estimate.to_decimal(dc) << "," << inc.to_decimal(20) << ","
           << err.to_decimal(20) << "\n";
    };

    const gk::BigReal pi = gk::const_pi(wp);
    if (rep == gk::Representation::r3_ci_series) {
        gk::BigReal pi2 = pi * pi;
        gk::BigReal sum = gk::BigReal::zero(wp);
        gk::BigReal prev = gk::BigReal::ratio(1, 4, wp); // empty-sum baseline
        const double term_tol = std::min(opt.tolerance * 0.25, 1e-18);
        for (unsigned long k = 1; k <= opt.k_max; ++k) {
            sum += gk::ci_at_2kpi(k, term_tol).rounded_to(wp) / static_cast<long>(k * k);
            gk::BigReal estimate = (1UL + gk::ldexp2(sum, 1) / pi2) / 4UL;
            if (k >= opt.k_min) emit(k, estimate, prev);
            prev = estimate;
        }
    } else if (rep == gk::Representation::r5_hyperfactorial) {
        gk::BigReal sum = gk::BigReal::zero(wp); // sum of k ln k
        gk::BigReal prev = gk::BigReal::zero(wp);
        for (unsigned long n = 1; n <= opt.k_max; ++n) {
            if (n > 1) sum += gk::log(gk::BigReal::of(static_cast<long>(n), wp)) * n;
            gk::BigReal nb = gk::BigReal::of(static_cast<long>(n), wp);
            gk::BigReal coeff = gk::ldexp2(nb * nb + nb, -1) + gk::BigReal::ratio(1, 12, wp);
            gk::BigReal estimate = sum - coeff * gk::log(nb) + gk::ldexp2(nb * nb, -2);
            if (n >= opt.k_min) emit(n, estimate, prev);
            prev = estimate;
        }
    } else if (rep == gk::Representation::r2_glaisher_product) {
        gk::BigReal ln2 = gk::const_ln2(wp);
        gk::BigReal s = 3L * ln2 - 2L * gk::log(gk::BigReal::of(3L, wp)) +
                        gk::BigReal::ratio(1, 4, wp);
        gk::BigReal lnpi = gk::log(pi);
        gk::BigReal gamma = gk::const_euler_gamma(wp);
        auto assemble = [&](const gk::BigReal& spart) {
            return ln2 / 36L + lnpi / 6L + (spart - gamma / 4L) / 3L;
        };
        gk::BigReal prev = assemble(s);
        for (unsigned long k = 1; k <= opt.k_max; ++k) {
            s += gk::detail::r2_s_term(k + 1, prec, wp); // term index k maps to r = k+1
            gk::BigReal estimate = assemble(s);
            if (k >= opt.k_min) emit(k, estimate, prev);
            prev = estimate;
        }
    } else { // r6, reconciled assembly
        if (opt.k_max > gk::kR6EscalationCap) {
            std::cerr << "gkconst: r6 terms are capped at k = " << gk::kR6EscalationCap << "\n";
            return kExitUsage;
        }
        gk::BigReal prev =
            (gk::const_ln_2pi(wp) + gk::const_euler_gamma(wp) +
             gk::BigReal::ratio(11, 2, wp) / (pi * pi)) / 12L;
        for (unsigned long k = 1; k <= opt.k_max; ++k) {
            auto r = gk::ln_a_r6(k, gk::Series2Mode::reconciled, opt.tolerance, prec);
            if (k >= opt.k_min) emit(k, r.value.rounded_to(wp), prev);
            prev = r.value.rounded_to(wp);
        }
    }
    return write_output(opt, os.str());
}

// ---- verify ----------------------------------------------------------------

double default_threshold(gk::IdentityName n) {
    return n == gk::IdentityName::eq15_ci ? 1e-9 : 1e-8;
}

int cmd_verify(const Options& opt, const std::string& names_arg, bool tol_given) {
    std::vector<gk::IdentityName> names;
    std::stringstream ss(names_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto n = gk::parse_identity_name(tok);
        if (!n) {
            std::cerr << "gkconst: unknown identity '" << tok
                      << "' (eq15_ci, eq24_si, eq27_i3_series, eq29_hyp)\n";
            return kExitUsage;
        }
        names.push_back(*n);
    }
    if (names.empty()) {
        std::cerr << "gkconst: --names needs at least one identity\n";
        return kExitUsage;
    }

    const auto prec = static_cast<gk::prec_t>(std::max<long>(opt.precision_bits, 192));
    bool all_match = true;
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    for (auto name : names) {
        const double thr = tol_given ? opt.tolerance : default_threshold(name);
        const bool single = name == gk::IdentityName::eq27_i3_series;
        const unsigned long lo = single ? 0 : opt.k_min;
        const unsigned long hi = single ? 0 : opt.k_max;
        for (unsigned long k = lo; k <= hi; ++k) {
            gk::IdentityReport r = gk::verify_identity(name, k, thr, prec);
            all_match = all_match && r.match;
            if (opt.format == "json") {
                ordered_json j;
                j["identity"] = r.identity_name;
                j["k"] = r.k_or_s;
                j["lhs"] = r.lhs.to_decimal(24);
                j["rhs"] = r.rhs.to_decimal(24);
                j["rel_error"] = r.rel_error;
                j["threshold"] = r.threshold;
                j["verdict"] = r.match ? "match" : "mismatch";
                j["notes"] = r.notes;
                arr.push_back(j);
            } else {
                os << r.identity_name;
                if (!single) os << " k=" << r.k_or_s;
                os << ": " << (r.match ? "match" : "MISMATCH") << " rel_error=" << r.rel_error
                   << " threshold=" << r.threshold << "\n    lhs=" << r.lhs.to_decimal(24)
                   << "\n    rhs=" << r.rhs.to_decimal(24) << "\n    " << r.notes << "\n";
            }
        }
    }
    std::string payload = opt.format == "json" ? arr.dump(2) + "\n" : os.str();
    int w = write_output(opt, payload);
    if (w != kExitOk) return w;
    return all_match ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ln A (Glaisher-Kinkelin) multi-route calculator and identity verifier"};
    app.require_subcommand(1);

    Options opt;
    opt.precision_bits = env_precision_default();

    std::string rep = "r2";
    std::string reps = "r1,r2,r3,r4";
    std::string names;

    CLI::App* c_compute = app.add_subcommand("compute", "compute one representation (or all)");
    c_compute->add_option("--rep", rep, "r1..r6 or all");
    add_common_flags(c_compute, opt);
    c_compute->add_option("--n", opt.n, "hyperfactorial cutoff for r5");

    CLI::App* c_compare = app.add_subcommand("compare", "compare routes against the r2 reference");
    c_compare->add_option("--reps", reps, "comma-separated list, e.g. r1,r2,r3,r4");
    add_common_flags(c_compare, opt);
    c_compare->add_option("--n", opt.n, "hyperfactorial cutoff for r5");

    CLI::App* c_conv = app.add_subcommand("convergence", "emit per-term convergence CSV");
    c_conv->add_option("--rep", rep, "r2, r3, r5 or r6");
    add_common_flags(c_conv, opt);
    c_conv->add_option("--k-min", opt.k_min, "first term index (default 1)");
    c_conv->add_option("--k-max", opt.k_max, "last term index");

    CLI::App* c_verify = app.add_subcommand("verify", "adjudicate closed-form identities");
    CLI::Option* names_opt =
        c_verify->add_option("--names", names, "eq15_ci,eq24_si,eq27_i3_series,eq29_hyp");
    names_opt->required();
    add_common_flags(c_verify, opt);
    c_verify->add_option("--k-min", opt.k_min, "first k (default 1)");
    c_verify->add_option("--k-max", opt.k_max, "last k (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        for (CLI::App* sub : {c_compute, c_compare, c_conv, c_verify}) {
            if (app.got_subcommand(sub)) {
                opt.tol_explicit = sub->count("--tol") > 0;
                opt.max_terms_explicit = sub->count("--max-terms") > 0;
            }
        }
        if (app.got_subcommand(c_compute)) return cmd_compute(opt, rep);
        if (app.got_subcommand(c_compare)) return cmd_compare(opt, reps);
        if (app.got_subcommand(c_conv)) return cmd_convergence(opt, rep);
        if (app.got_subcommand(c_verify)) return cmd_verify(opt, names, opt.tol_explicit);
    } catch (const gk::domain_error& e) {
        std::cerr << "gkconst: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "gkconst: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
