#ifndef CONIC_QUADRATURE_HPP
#define CONIC_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace conic {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::uint64_t evaluations = 0;
};

// Thrown when the evaluation budget runs out; carries the best estimate.
class QuadratureBudgetError : public std::runtime_error {
public:
    QuadratureBudgetError(const char* what, QuadratureResult best)
        : std::runtime_error(what), best_estimate(best) {}
    QuadratureResult best_estimate;
};

// Adaptive Simpson for integrands smooth on [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol,
                           std::uint64_t max_evaluations = 2'000'000);

// Tanh-sinh (double-exponential) rule; handles integrable endpoint
// singularities. Non-finite samples at the extreme nodes are dropped.
QuadratureResult integrate_singular(const std::function<double(double)>& f,
                                    double a, double b, double tol);

// Same rule, but the integrand also receives exact distances to both
// endpoints (computed from the node complement, free of cancellation).
// Needed when the integrand must resolve 1/(b - x) style factors beyond
// what a rounded x can carry.
QuadratureResult integrate_singular(
    const std::function<double(double x, double dist_a, double dist_b)>& f,
    double a, double b, double tol);

} // namespace conic

#endif
