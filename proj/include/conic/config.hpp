#ifndef CONIC_CONFIG_HPP
#define CONIC_CONFIG_HPP

#include <cstdint>

namespace conic {

// All tunable defaults live here; the CLI exposes flags for each.
// Environment variables are intentionally not consulted.
struct Defaults {
    // Brute-force field enumeration is refused above this bound.
    static constexpr std::uint64_t enumeration_bound = std::uint64_t{1} << 20;
    // Smallest-prime-factor sieve size for character evaluation.
    static constexpr std::uint64_t sieve_limit = 10'000'000;
    // Tolerance for closed-form identity checks.
    static constexpr double closed_form_tol = 1e-10;
    // Calibrated floor for the conditionally convergent Euler product of
    // zeta_hat at s = 1 (measured convergence: |err| < 1.7e-4 for prime
    // bounds in [1e6, 1e7]; the floor leaves headroom for oscillation).
    static constexpr double euler_product_floor = 5e-4;
    // Prime bound used by the zeta_hat Euler-product verification.
    static constexpr std::uint64_t euler_product_bound = 10'000'000;
};

} // namespace conic

#endif
