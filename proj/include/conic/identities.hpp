#ifndef CONIC_IDENTITIES_HPP
#define CONIC_IDENTITIES_HPP

#include <cstdint>
#include <vector>

#include "conic/quadrature.hpp"
#include "conic/series.hpp"

namespace conic {

// Integral of cos^n x over [0, pi/2] by the (n-1)/n recurrence, even n only.
double wallis(unsigned n);

// (2k-1)!!/(2k)!! via the ratio recurrence; never materializes factorials.
double double_factorial_ratio(unsigned k);

// Exact-rational form of the same ratio, reduced; valid for k <= 30.
struct Rational {
    std::uint64_t num = 1, den = 1;
    double to_double() const { return double(num) / double(den); }
};
Rational double_factorial_ratio_exact(unsigned k);

// wallis(2k) == (2k-1)!!/(2k)!! * (pi/2), where pi/2 enters as
// 2 * zeta_accelerated(1).
IdentityCheck wallis_closed_form_check(unsigned k, double tol);

// Partial sum of sum_k (2k-1)!!/(2k)!! / (2k+1), k = 0..terms-1.
SeriesEstimate series_S(std::uint64_t terms);

// Richardson step in h = N^{-1/2}: 2*S(N) - S(N/4) removes the leading tail.
double series_S_extrapolated(std::uint64_t terms);

// sum t^{2k}/(2k+1} vs (1/(2t)) ln((1+t)/(1-t)), 0 < |t| < 1.
IdentityCheck log_series_closed_form_check(double t, double tol);

// Integral of (-ln u) u^{2k} over [0, 1]; closed form 1/(2k+1)^2.
QuadratureResult log_kernel_integral(unsigned k);

// The four routes to the quarter period pi/2 and their pairwise agreement.
struct PeriodChain {
    double quadrature_leg = 0.0;   // tanh-sinh on (1-x^2)^{-1/2}
    double substitution_leg = 0.0; // x = sin(theta) reference route
    double series_leg = 0.0;       // extrapolated series_S
    double ratio_leg = 0.0;        // (2/A) * sum 1/(2k+1)^2
    double zeta_hat_leg = 0.0;     // zeta_hat closed form at s = 1
    std::vector<IdentityCheck> pairwise;
    bool passed = false;
};
PeriodChain period_chain_check(double tol_series = 1e-6,
                               double tol_exact = 1e-10);

} // namespace conic

#endif
