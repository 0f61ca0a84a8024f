#include "conic/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace conic {

const char* method_name(Method m) {
    switch (m) {
        case Method::partial_sum: return "partial_sum";
        case Method::accelerated_sum: return "accelerated_sum";
        case Method::euler_product: return "euler_product";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

IdentityCheck make_check(std::string id, SeriesEstimate lhs, SeriesEstimate rhs,
                         double tolerance) {
    IdentityCheck c;
    c.identity_id = std::move(id);
    c.lhs = lhs;
    c.rhs = rhs;
    c.tolerance = tolerance;
    c.passed = std::abs(lhs.value - rhs.value) <= tolerance;
    return c;
}

double euler_factor_zeta(std::uint64_t p, double s) {
    return 1.0 / (1.0 - a_p(p) * std::pow(double(p), -s));
}

double euler_factor_zeta_hat(std::uint64_t p, double s) {
    return 1.0 / (1.0 + a_p(p) * std::pow(double(p), -s));
}

SeriesEstimate zeta_partial(double s, std::uint64_t terms) {
    if (terms < 1) throw std::invalid_argument("zeta_partial: terms >= 1 required");
    KahanSum acc;
    for (std::uint64_t k = 1; k <= terms; ++k) {
        std::uint64_t n = 2 * k - 1;
        acc.add(chi(n) * std::pow(double(n), -s));
    }
    SeriesEstimate e;
    e.value = acc.value();
    e.s = s;
    e.method = Method::partial_sum;
    e.cutoff = terms;
    e.error_proxy = std::pow(double(2 * terms + 1), -s);
    return e;
}

SeriesEstimate zeta_accelerated(double s, unsigned terms) {
    if (terms < 1) throw std::invalid_argument("zeta_accelerated: terms >= 1");
    // Partial sums of the alternating series, then iterated averaging.
    std::vector<double> t(terms);
    KahanSum acc;
    for (unsigned k = 0; k < terms; ++k) {
        double term = std::pow(double(2 * k + 1), -s);
        acc.add((k % 2 == 0) ? term : -term);
        t[k] = acc.value();
    }
    double prev = t[0];
    for (unsigned len = terms; len > 1; --len) {
        prev = t[0];
        for (unsigned i = 0; i + 1 < len; ++i) t[i] = 0.5 * (t[i] + t[i + 1]);
    }
    SeriesEstimate e;
    e.value = t[0];
    e.s = s;
    e.method = Method::accelerated_sum;
    e.cutoff = terms;
    e.error_proxy = std::abs(t[0] - prev);
    if (terms == 1) e.error_proxy = 1.0;
    return e;
}

SeriesEstimate zeta_hat_partial(double s, std::uint64_t terms,
                                const PrimeSieve& sieve) {
    if (terms < 1) throw std::invalid_argument("zeta_hat_partial: terms >= 1");
    KahanSum acc;
    double half = 0.0;
    for (std::uint64_t k = 1; k <= terms; ++k) {
        std::uint64_t n = 2 * k - 1;
        acc.add(chi_hat(n, sieve) * std::pow(double(n), -s));
        if (k == terms / 2) half = acc.value();
    }
    SeriesEstimate e;
    e.value = acc.value();
    e.s = s;
    e.method = Method::partial_sum;
    e.cutoff = terms;
    e.error_proxy = (terms >= 2) ? std::abs(e.value - half) : 1.0;
    return e;
}

double riemann_zeta(double s) {
    if (s <= 1.0) throw std::domain_error("riemann_zeta: s > 1 required");
    const int N = 64;
    KahanSum acc;
    for (int n = 1; n < N; ++n) acc.add(std::pow(double(n), -s));
    double Nd = N;
    double tail = std::pow(Nd, 1.0 - s) / (s - 1.0)   // integral
                + 0.5 * std::pow(Nd, -s)              // f(N)/2
                + s / 12.0 * std::pow(Nd, -s - 1.0)   // -f'(N)/12
                - s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(Nd, -s - 3.0)
                + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 *
                      std::pow(Nd, -s - 5.0);
    return acc.value() + tail;
}

double odd_zeta(double s) {
    return (1.0 - std::pow(2.0, -s)) * riemann_zeta(s);
}

double odd_zeta_direct(double s) {
    if (s <= 1.0) throw std::domain_error("odd_zeta_direct: s > 1 required");
    // Sum f(m) = (2m+1)^-s over m >= 0, direct to M then Euler-Maclaurin.
    const std::uint64_t M = 100000;
    KahanSum acc;
    for (std::uint64_t m = 0; m < M; ++m)
        acc.add(std::pow(double(2 * m + 1), -s));
    const double x = double(2 * M + 1);
    double tail = std::pow(x, 1.0 - s) / (2.0 * (s - 1.0)) // integral over m
                + 0.5 * std::pow(x, -s)
                + 2.0 * s / 12.0 * std::pow(x, -s - 1.0)
                - 8.0 * s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(x, -s - 3.0);
    return acc.value() + tail;
}

SeriesEstimate zeta_hat_closed_form(double s) {
    if (s <= 0.5) throw std::domain_error("zeta_hat_closed_form: s > 1/2 required");
    SeriesEstimate e;
    e.value = odd_zeta(2.0 * s) / zeta_accelerated(s).value;
    e.s = s;
    e.method = Method::closed_form;
    e.cutoff = 0;
    e.error_proxy = std::numeric_limits<double>::epsilon() * std::abs(e.value);
    return e;
}

SeriesEstimate euler_product(SeriesKind kind, double s, std::uint64_t prime_bound) {
    if (prime_bound < 3)
        throw std::invalid_argument("euler_product: prime bound >= 3 required");
    // Odd primes ascending; conditional convergence makes the order part of
    // the contract.
    std::vector<bool> composite(prime_bound + 1, false);
    double prod = 1.0;
    double at_half = 1.0;
    const std::uint64_t half = prime_bound / 2;
    for (std::uint64_t i = 3; i <= prime_bound; i += 2) {
        if (composite[i]) continue;
        if (i <= prime_bound / i)
            for (std::uint64_t j = i * i; j <= prime_bound; j += 2 * i)
                composite[j] = true;
        prod *= (kind == SeriesKind::zeta) ? euler_factor_zeta(i, s)
                                           : euler_factor_zeta_hat(i, s);
        if (i <= half) at_half = prod;
    }
    SeriesEstimate e;
    e.value = prod;
    e.s = s;
    e.method = Method::euler_product;
    e.cutoff = prime_bound;
    e.error_proxy = std::abs(prod - at_half);
    return e;
}

IdentityCheck functional_equation_check(double s, double tol) {
    SeriesEstimate lhs;
    lhs.value = zeta_accelerated(s).value * zeta_hat_closed_form(s).value;
    lhs.s = s;
    lhs.method = Method::closed_form;
    lhs.cutoff = 0;
    lhs.error_proxy = std::numeric_limits<double>::epsilon() * std::abs(lhs.value);

    SeriesEstimate rhs;
    rhs.value = odd_zeta_direct(2.0 * s);
    rhs.s = s;
    rhs.method = Method::partial_sum;
    rhs.cutoff = 100000;
    rhs.error_proxy = std::numeric_limits<double>::epsilon() * std::abs(rhs.value);

    return make_check("lseries.functional_equation_s=" + std::to_string(s), lhs,
                      rhs, tol);
}

} // namespace conic
