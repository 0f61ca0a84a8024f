#include "conic/identities.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace conic {

namespace {

SeriesEstimate scalar_estimate(double v, double s, Method m,
                               std::uint64_t cutoff = 0) {
    SeriesEstimate e;
    e.value = v;
    e.s = s;
    e.method = m;
    e.cutoff = cutoff;
    e.error_proxy = std::numeric_limits<double>::epsilon() * std::abs(v);
    return e;
}

} // namespace

double wallis(unsigned n) {
    if (n % 2 != 0)
        throw std::invalid_argument("wallis: odd exponents are unsupported");
    double v = std::numbers::pi / 2.0;
    for (unsigned m = 2; m <= n; m += 2) v *= double(m - 1) / double(m);
    return v;
}

double double_factorial_ratio(unsigned k) {
    double r = 1.0;
    for (unsigned i = 1; i <= k; ++i) r *= double(2 * i - 1) / double(2 * i);
    return r;
}

Rational double_factorial_ratio_exact(unsigned k) {
    if (k > 30)
        throw std::invalid_argument("double_factorial_ratio_exact: k <= 30 only");
    using u128 = unsigned __int128;
    u128 num = 1, den = 1;
    // Reduce eagerly; (2k-1)!!/(2k)!! reduces to C(2k,k)/4^k, which fits
    // 64 bits through k = 30.
    for (unsigned i = 1; i <= k; ++i) {
        num *= 2 * i - 1;
        den *= 2 * i;
        u128 a = num, b = den;
        while (b) { u128 t = a % b; a = b; b = t; }
        num /= a;
        den /= a;
    }
    if (num > UINT64_MAX || den > UINT64_MAX)
        throw std::overflow_error("double_factorial_ratio_exact: overflow");
    return {std::uint64_t(num), std::uint64_t(den)};
}

IdentityCheck wallis_closed_form_check(unsigned k, double tol) {
    double half_pi = 2.0 * zeta_accelerated(1.0).value;
    SeriesEstimate lhs = scalar_estimate(wallis(2 * k), 0.0, Method::closed_form);
    SeriesEstimate rhs = scalar_estimate(double_factorial_ratio(k) * half_pi, 0.0,
                                         Method::accelerated_sum, 64);
    return make_check("analysis.wallis_k" + std::to_string(k), lhs, rhs, tol);
}

SeriesEstimate series_S(std::uint64_t terms) {
    if (terms < 1) throw std::invalid_argument("series_S: terms >= 1 required");
    KahanSum acc;
    double ratio = 1.0;
    double half = 0.0;
    for (std::uint64_t k = 0; k < terms; ++k) {
        if (k > 0) ratio *= double(2 * k - 1) / double(2 * k);
        acc.add(ratio / double(2 * k + 1));
        if (k + 1 == terms / 2) half = acc.value();
    }
    SeriesEstimate e;
    e.value = acc.value();
    e.s = 1.0;
    e.method = Method::partial_sum;
    e.cutoff = terms;
    e.error_proxy = (terms >= 2) ? std::abs(e.value - half) : 1.0;
    return e;
}

double series_S_extrapolated(std::uint64_t terms) {
    if (terms < 4) return series_S(terms).value;
    return 2.0 * series_S(terms).value - series_S(terms / 4).value;
}

IdentityCheck log_series_closed_form_check(double t, double tol) {
    if (std::abs(t) >= 1.0 || t == 0.0)
        throw std::domain_error("log_series_closed_form_check: need 0 < |t| < 1");
    KahanSum acc;
    double t2 = t * t, power = 1.0;
    std::uint64_t terms = 0;
    for (std::uint64_t k = 0;; ++k) {
        acc.add(power / double(2 * k + 1));
        ++terms;
        power *= t2;
        if (power < tol / 10.0) break;
    }
    SeriesEstimate lhs;
    lhs.value = acc.value();
    lhs.s = t; // parameter of the identity, recorded in the s slot
    lhs.method = Method::partial_sum;
    lhs.cutoff = terms;
    lhs.error_proxy = power;

    double closed = 0.5 * std::log((1.0 + t) / (1.0 - t)) / t;
    SeriesEstimate rhs = scalar_estimate(closed, t, Method::closed_form);
    return make_check("analysis.log_series_t=" + std::to_string(t), lhs, rhs, tol);
}

QuadratureResult log_kernel_integral(unsigned k) {
    auto f = [k](double u) {
        return -std::log(u) * std::pow(u, 2.0 * double(k));
    };
    return integrate_singular(f, 0.0, 1.0, 1e-12);
}

PeriodChain period_chain_check(double tol_series, double tol_exact) {
    PeriodChain pc;
    // 1 - x^2 = (1 - x)(1 + x); the exact endpoint distance resolves the
    // singular factor past the rounding of x itself.
    pc.quadrature_leg =
        integrate_singular(
            [](double x, double, double db) {
                return 1.0 / std::sqrt(db * (1.0 + x));
            },
            0.0, 1.0, 1e-12)
            .value;
    // x = sin(theta) turns the integrand into 1 on [0, pi/2].
    pc.substitution_leg =
        integrate([](double) { return 1.0; }, 0.0, std::numbers::pi / 2.0, 1e-12)
            .value;
    pc.series_leg = series_S_extrapolated(1'000'000);
    double A = 2.0 * zeta_accelerated(1.0).value;
    pc.ratio_leg = (2.0 / A) * odd_zeta_direct(2.0);
    pc.zeta_hat_leg = zeta_hat_closed_form(1.0).value;

    struct Leg {
        const char* name;
        double value;
        Method method;
        bool series;
    };
    const Leg legs[] = {
        {"quadrature", pc.quadrature_leg, Method::closed_form, false},
        {"substitution", pc.substitution_leg, Method::closed_form, false},
        {"series", pc.series_leg, Method::partial_sum, true},
        {"ratio", pc.ratio_leg, Method::accelerated_sum, false},
        {"zeta_hat", pc.zeta_hat_leg, Method::closed_form, false},
    };
    pc.passed = true;
    for (size_t i = 0; i < std::size(legs); ++i) {
        for (size_t j = i + 1; j < std::size(legs); ++j) {
            double tol = (legs[i].series || legs[j].series) ? tol_series : tol_exact;
            auto c = make_check(std::string("analysis.period_chain.") +
                                    legs[i].name + "_vs_" + legs[j].name,
                                scalar_estimate(legs[i].value, 1.0, legs[i].method),
                                scalar_estimate(legs[j].value, 1.0, legs[j].method),
                                tol);
            pc.passed = pc.passed && c.passed;
            pc.pairwise.push_back(std::move(c));
        }
    }
    return pc;
}

} // namespace conic
