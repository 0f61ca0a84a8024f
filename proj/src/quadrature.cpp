#include "conic/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace conic {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    std::uint64_t evals = 0;
    std::uint64_t budget;

    double eval(double x) {
        ++evals;
        return f(x);
    }
};

double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth,
                   double& err_acc) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    if (st.evals + 2 > st.budget)
        throw QuadratureBudgetError("integrate: evaluation budget exceeded",
                                    {whole, tol, st.evals});
    double flm = st.eval(lm), frm = st.eval(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_rec(st, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, err_acc) +
           simpson_rec(st, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, err_acc);
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol, std::uint64_t max_evaluations) {
    SimpsonState st{f, 0, max_evaluations};
    double fa = st.eval(a), fb = st.eval(b), fm = st.eval(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double err = 0.0;
    double v = simpson_rec(st, a, b, fa, fm, fb, whole, tol, 48, err);
    return {v, err, st.evals};
}

QuadratureResult integrate_singular(
    const std::function<double(double x, double dist_a, double dist_b)>& f,
    double a, double b, double tol) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double half_pi = std::numbers::pi / 2.0;
    std::uint64_t evals = 0;

    auto sample = [&](double x, double da, double db) -> double {
        ++evals;
        double v = f(x, da, db);
        return std::isfinite(v) ? v : 0.0;
    };

    // Level 0: trapezoid with h = 1 on t in [-tmax, tmax]; then halve h,
    // reusing prior nodes, until two successive levels agree.
    const double tmax = 3.8; // tanh((pi/2) sinh 3.8) == 1 to double precision
    double h = 1.0;
    auto node_sum = [&](double step, double offset) {
        // Sum of w(t) f(x(t)) over t = offset + k*step, symmetric nodes at
        // -t folded in. one_m = 1 - tanh(u) and one_p = 1 + tanh(u) are
        // formed from exp(-2u) so the endpoint distances stay exact.
        double acc = 0.0, comp = 0.0;
        for (double t = offset;; t += step) {
            if (t > tmax) break;
            double u = half_pi * std::sinh(t);
            double em = std::exp(-2.0 * u);
            double one_m = 2.0 * em / (1.0 + em);
            double one_p = 2.0 / (1.0 + em);
            double w = half_pi * std::cosh(t) * one_m * one_p;
            if (w < 1e-320) break;
            double contrib;
            if (t == 0.0) {
                contrib = w * sample(c, c - a, b - c);
            } else {
                double right = sample(b - r * one_m, r * one_p, r * one_m);
                double left = sample(a + r * one_m, r * one_m, r * one_p);
                contrib = w * (right + left);
            }
            double y = contrib - comp;
            double s2 = acc + y;
            comp = (s2 - acc) - y;
            acc = s2;
        }
        return acc;
    };

    double sum = node_sum(1.0, 0.0);
    double prev_value = r * h * sum;
    double value = prev_value, err = prev_value;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        sum += node_sum(2.0 * h, h); // only the new midpoints
        value = r * h * sum;
        err = std::abs(value - prev_value);
        if (level >= 3 && err <= tol) break;
        prev_value = value;
    }
    return {value, err, evals};
}

QuadratureResult integrate_singular(const std::function<double(double)>& f,
                                    double a, double b, double tol) {
    return integrate_singular(
        [&f](double x, double, double) { return f(x); }, a, b, tol);
}

} // namespace conic
