#include "conic/report.hpp"

#include <cmath>
#include <numbers>

#include "conic/counting.hpp"
#include "conic/identities.hpp"

namespace conic {

namespace {

SeriesEstimate exact_value(double v, double s = 0.0) {
    SeriesEstimate e;
    e.value = v;
    e.s = s;
    e.method = Method::closed_form;
    e.cutoff = 0;
    e.error_proxy = 0.0;
    return e;
}

double pick_tol(double user_tol, double def) {
    return user_tol > 0.0 ? user_tol : def;
}

} // namespace

VerificationReport run_counting_suite(const SuiteOptions& opt) {
    VerificationReport rep;

    // Brute force vs closed formula over every prime power q <= limit,
    // including characteristic 2; counts are exact integers.
    std::uint64_t mismatches = 0, total_bad = 0, cancel_bad = 0, records = 0;
    for (std::uint64_t p = 2; p <= opt.prime_limit; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned n = 1;; ++n) {
            PrimePower q;
            try {
                q = PrimePower::make(p, n);
            } catch (const std::overflow_error&) {
                break;
            }
            if (q.q > opt.prime_limit) break;
            FiniteField field(q);
            std::uint64_t brute = count_affine_bruteforce(field);
            if (brute != count_affine_formula(q)) ++mismatches;
            PointCount pc = count_total(q);
            if (pc.total != q.q + 1) ++total_bad;
            if (q.odd() && pc.affine_error + pc.infinity_error != 0) ++cancel_bad;
            ++records;
        }
    }
    rep.checks.push_back(make_check("counting.bruteforce_equals_formula",
                                    exact_value(double(mismatches)),
                                    exact_value(0.0), 0.0));
    rep.checks.push_back(make_check("counting.total_equals_q_plus_1",
                                    exact_value(double(total_bad)),
                                    exact_value(0.0), 0.0));
    rep.checks.push_back(make_check("counting.error_term_cancellation",
                                    exact_value(double(cancel_bad)),
                                    exact_value(0.0), 0.0));
    rep.checks.back().lhs.cutoff = records;

    // a_p equals the measured affine error term for every odd prime.
    std::uint64_t splice_bad = 0;
    for (const PointCount& pc : scan_primes(opt.prime_limit, 1)) {
        if (a_p(pc.q.p) != pc.affine_error) ++splice_bad;
    }
    rep.checks.push_back(make_check("counting.a_p_matches_affine_error",
                                    exact_value(double(splice_bad)),
                                    exact_value(0.0), 0.0));

    // Convention flag: the affine error term uses exponent (q-1)/2. The
    // alternative (q+1)/2 reading would predict 6 affine points over F_5;
    // brute force gives 4.
    FiniteField f5(PrimePower::make(5, 1));
    rep.checks.push_back(make_check(
        "counting.affine_error_exponent_is_q_minus_1_half",
        exact_value(double(count_affine_bruteforce(f5))),
        exact_value(double(5 - a_p(5))), 0.0));

    return rep;
}

VerificationReport run_lseries_suite(const SuiteOptions& opt) {
    VerificationReport rep;
    const double pi = std::numbers::pi;

    auto zeta1 = zeta_accelerated(1.0);
    rep.checks.push_back(make_check("lseries.zeta_at_1_equals_pi_over_4", zeta1,
                                    exact_value(pi / 4.0, 1.0),
                                    pick_tol(opt.tol, 1e-12)));

    auto zh1 = zeta_hat_closed_form(1.0);
    rep.checks.push_back(make_check("lseries.zeta_hat_at_1_equals_pi_over_2", zh1,
                                    exact_value(pi / 2.0, 1.0),
                                    pick_tol(opt.tol, 1e-10)));

    // Conditionally convergent Euler product; the tolerance floor is the
    // calibrated convergence envelope, never loosened downward.
    auto prod = euler_product(SeriesKind::zeta_hat, 1.0, opt.euler_product_bound);
    double prod_tol = std::max(pick_tol(opt.tol, Defaults::euler_product_floor),
                               Defaults::euler_product_floor);
    rep.checks.push_back(make_check("lseries.zeta_hat_euler_product", prod,
                                    exact_value(pi / 2.0, 1.0), prod_tol));

    for (double s : {1.0, 1.25, 1.5, 2.0}) {
        rep.checks.push_back(functional_equation_check(s, pick_tol(opt.tol, 1e-8)));
    }

    // At s = 1 both sides of the functional equation equal pi^2/8.
    SeriesEstimate conv;
    conv.value = zeta1.value * zh1.value;
    conv.s = 1.0;
    conv.method = Method::closed_form;
    rep.checks.push_back(make_check("lseries.convolution_at_1_equals_pi2_over_8",
                                    conv, exact_value(pi * pi / 8.0, 1.0),
                                    pick_tol(opt.tol, 1e-10)));

    // Absolutely convergent regime: product and sum must meet.
    rep.checks.push_back(make_check(
        "lseries.product_sum_consistency_s2",
        euler_product(SeriesKind::zeta, 2.0, 100000), zeta_accelerated(2.0),
        pick_tol(opt.tol, 1e-6)));

    // Convention flag: the series coefficient is chi(2k-1), not the literal
    // constant (-1)^(2k-1); with chi the accelerated sum reaches pi/4.
    rep.checks.push_back(make_check("lseries.coefficient_is_mod4_character",
                                    zeta_partial(1.0, 4),
                                    exact_value(1.0 - 1.0 / 3 + 1.0 / 5 - 1.0 / 7, 1.0),
                                    1e-15));

    return rep;
}

VerificationReport run_analysis_suite(const SuiteOptions& opt) {
    VerificationReport rep;

    for (unsigned k = 0; k <= 20; ++k) {
        rep.checks.push_back(
            wallis_closed_form_check(k, pick_tol(opt.tol, 1e-10)));
        // Recurrence vs quadrature.
        auto q = integrate(
            [k](double x) { return std::pow(std::cos(x), 2.0 * double(k)); }, 0.0,
            std::numbers::pi / 2.0, 1e-12);
        SeriesEstimate lhs = exact_value(wallis(2 * k));
        SeriesEstimate rhs;
        rhs.value = q.value;
        rhs.method = Method::partial_sum;
        rhs.cutoff = q.evaluations;
        rhs.error_proxy = q.abs_error_estimate;
        rep.checks.push_back(make_check("analysis.wallis_quadrature_k" +
                                            std::to_string(k),
                                        lhs, rhs, pick_tol(opt.tol, 1e-10)));
    }

    for (unsigned k = 0; k <= 20; ++k) {
        auto q = log_kernel_integral(k);
        SeriesEstimate lhs;
        lhs.value = q.value;
        lhs.method = Method::partial_sum;
        lhs.cutoff = q.evaluations;
        lhs.error_proxy = q.abs_error_estimate;
        double n = double(2 * k + 1);
        rep.checks.push_back(make_check("analysis.log_kernel_k" + std::to_string(k),
                                        lhs, exact_value(1.0 / (n * n)),
                                        pick_tol(opt.tol, 1e-10)));
    }

    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        rep.checks.push_back(
            log_series_closed_form_check(t, pick_tol(opt.tol, 1e-10)));
    }

    PeriodChain chain = period_chain_check(1e-6, pick_tol(opt.tol, 1e-10));
    for (auto& c : chain.pairwise) rep.checks.push_back(c);

    return rep;
}

VerificationReport run_all_suites(const SuiteOptions& opt) {
    VerificationReport rep;
    for (auto* fn : {run_counting_suite, run_lseries_suite, run_analysis_suite}) {
        auto part = fn(opt);
        rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
    }
    return rep;
}

nlohmann::json check_to_json(const IdentityCheck& c) {
    return nlohmann::json{
        {"identity_id", c.identity_id},
        {"s", c.lhs.s},
        {"lhs", c.lhs.value},
        {"rhs", c.rhs.value},
        {"abs_diff", std::abs(c.lhs.value - c.rhs.value)},
        {"tolerance", c.tolerance},
        {"method_lhs", method_name(c.lhs.method)},
        {"method_rhs", method_name(c.rhs.method)},
        {"cutoff", std::max(c.lhs.cutoff, c.rhs.cutoff)},
        {"passed", c.passed},
    };
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (auto& c : r.checks) checks.push_back(check_to_json(c));
    return nlohmann::json{{"all_passed", r.all_passed()}, {"checks", checks}};
}

} // namespace conic
