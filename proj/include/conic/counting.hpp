#ifndef CONIC_COUNTING_HPP
#define CONIC_COUNTING_HPP

#include <cstdint>
#include <vector>

#include "conic/config.hpp"
#include "conic/field.hpp"

namespace conic {

// Point counts for x^2 + y^2 = z^2 over F_q: the affine chart x^2 + y^2 = 1
// plus the chart at infinity 1 + y^2 = z^2 (z normalized, i.e. solutions of
// y^2 = -1). The error terms measure the deviation from q and 1 respectively.
struct PointCount {
    PrimePower q;
    std::uint64_t affine = 0;
    std::uint64_t infinity = 0;
    std::uint64_t total = 0;
    int affine_error = 0;    // affine = q - affine_error
    int infinity_error = 0;  // infinity = 1 - infinity_error
};

// Exact affine count by enumeration: one pass to tabulate square
// occurrences, one pass over x. O(q) field operations.
std::uint64_t count_affine_bruteforce(const FiniteField& field);

// Secondary oracle: raw O(q^2) enumeration of all (x, y) pairs.
std::uint64_t count_affine_pairs(const FiniteField& field);

// Closed formula: 2^n in characteristic 2, q - (-1)^((q-1)/2) for odd q.
std::uint64_t count_affine_formula(const PrimePower& q);

// Points at infinity: 1 in characteristic 2, 1 + (-1)^((q-1)/2) for odd q.
std::uint64_t count_infinity(const PrimePower& q);

// Assemble the full count from the closed formulas. When q is within
// crosscheck_bound the affine count is verified against brute force
// (std::logic_error on mismatch). Above the bound no cross-check runs.
PointCount count_total(const PrimePower& q,
                       std::uint64_t crosscheck_bound = Defaults::enumeration_bound);

// Sum of x^k over F_p, reduced mod p: p-1 when k > 0 and (p-1) | k,
// otherwise 0 (including k = 0, where the sum is p ones).
std::uint64_t power_sum_mod_p(std::uint64_t p, std::uint64_t k);

// PointCount for every odd prime p <= limit, ascending, independent of the
// worker count. Primes within crosscheck_bound are verified by brute force.
std::vector<PointCount> scan_primes(std::uint64_t limit, unsigned workers = 1,
                                    std::uint64_t crosscheck_bound =
                                        Defaults::enumeration_bound);

} // namespace conic

#endif
