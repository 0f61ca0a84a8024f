#ifndef CONIC_SERIES_HPP
#define CONIC_SERIES_HPP

#include <cstdint>
#include <string>

#include "conic/characters.hpp"
#include "conic/config.hpp"

namespace conic {

enum class Method { partial_sum, accelerated_sum, euler_product, closed_form };
const char* method_name(Method m);

struct SeriesEstimate {
    double value = 0.0;
    double s = 0.0;
    Method method = Method::partial_sum;
    std::uint64_t cutoff = 0; // terms N or prime bound P; 0 for closed forms
    double error_proxy = 0.0;
};

struct IdentityCheck {
    std::string identity_id;
    SeriesEstimate lhs;
    SeriesEstimate rhs;
    double tolerance = 0.0;
    bool passed = false;
};

IdentityCheck make_check(std::string id, SeriesEstimate lhs, SeriesEstimate rhs,
                         double tolerance);

// Compensated (Kahan) accumulator.
struct KahanSum {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// Local Euler factors at an odd prime: 1/(1 -+ a_p p^-s).
double euler_factor_zeta(std::uint64_t p, double s);
double euler_factor_zeta_hat(std::uint64_t p, double s);

// Partial sum of chi(2k-1)/(2k-1)^s, k = 1..terms, ascending.
SeriesEstimate zeta_partial(double s, std::uint64_t terms);

// Euler transform (iterated averaging) of the alternating partial sums.
SeriesEstimate zeta_accelerated(double s, unsigned terms = 64);

// Partial sum of chi_hat(2k-1)/(2k-1)^s; needs a sieve covering 2*terms.
SeriesEstimate zeta_hat_partial(double s, std::uint64_t terms,
                                const PrimeSieve& sieve);

// Riemann zeta for real s > 1, Euler-Maclaurin tail correction.
double riemann_zeta(double s);

// Sum over odd n of n^-s = (1 - 2^-s) zeta(s), s > 1.
double odd_zeta(double s);

// Independent route: direct compensated sum over odd integers with an
// Euler-Maclaurin tail, sharing no code with riemann_zeta.
double odd_zeta_direct(double s);

// zeta_hat via the functional equation: odd_zeta(2s) / zeta(M,s).
SeriesEstimate zeta_hat_closed_form(double s);

enum class SeriesKind { zeta, zeta_hat };

// Product of local factors over odd primes <= prime_bound, ascending.
SeriesEstimate euler_product(SeriesKind kind, double s, std::uint64_t prime_bound);

// zeta(M,s) * zeta_hat(M,s) == sum over odd n of n^-2s. The left side pairs
// the accelerated sum with the closed form (whose numerator rides on
// riemann_zeta); the right side is the independent odd-integer summation.
IdentityCheck functional_equation_check(double s, double tol);

} // namespace conic

#endif
