#ifndef CONIC_CHARACTERS_HPP
#define CONIC_CHARACTERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace conic {

// Smallest-prime-factor sieve. Immutable after construction; share freely.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const { return spf_.size() - 1; }
    std::uint32_t smallest_factor(std::uint64_t n) const;
    bool is_prime(std::uint64_t n) const {
        return n >= 2 && smallest_factor(n) == n;
    }
    std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) const;

private:
    std::vector<std::uint32_t> spf_; // spf_[n] = smallest prime factor of n
};

struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> factors; // ascending primes

    unsigned omega_with_multiplicity() const {
        unsigned r = 0;
        for (auto& [p, e] : factors) r += e;
        return r;
    }
};

// Canonical factorization. Uses the sieve for n <= sieve.limit(), trial
// division by sieved primes up to sqrt(n) beyond that. n = 0 is invalid.
Factorization factorize(std::uint64_t n, const PrimeSieve& sieve);

// a_p = (-1)^((p-1)/2), the affine counting error term at an odd prime.
int a_p(std::uint64_t p);

// a_{p^k} = (a_p)^k, with a_{p^0} = 1.
int a_prime_power(std::uint64_t p, unsigned k);

// alpha_{p^k} = (-1)^k a_{p^k} = (alpha_p)^k with alpha_p = -a_p.
int alpha_prime_power(std::uint64_t p, unsigned k);

// The mod-4 character: 0 on even n, (-1)^((n-1)/2) on odd n.
int chi(std::uint64_t n);

// Same character via the factorization product of a_{p^r} values.
int chi_product(std::uint64_t n, const PrimeSieve& sieve);

// Liouville lambda: (-1)^Omega(n).
int liouville(std::uint64_t n, const PrimeSieve& sieve);

// Twisted character: 0 on even n, (-1)^(sum of exponents) * chi(n) on odd n.
int chi_hat(std::uint64_t n, const PrimeSieve& sieve);

// Same twist via the product of alpha_{p^r} values (cross-testing route).
int chi_hat_product(std::uint64_t n, const PrimeSieve& sieve);

} // namespace conic

#endif
