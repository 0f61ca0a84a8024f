#include "conic/characters.hpp"

#include <stdexcept>
#include <string>

namespace conic {

PrimeSieve::PrimeSieve(std::uint64_t limit) {
    if (limit < 2) limit = 2;
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i) {
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
}

std::uint32_t PrimeSieve::smallest_factor(std::uint64_t n) const {
    if (n < 2 || n >= spf_.size())
        throw std::out_of_range("PrimeSieve: n outside sieve range");
    return spf_[n];
}

std::vector<std::uint64_t> PrimeSieve::primes_up_to(std::uint64_t bound) const {
    if (bound > limit()) bound = limit();
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= bound; ++n)
        if (spf_[n] == n) out.push_back(n);
    return out;
}

Factorization factorize(std::uint64_t n, const PrimeSieve& sieve) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    if (n == 1) return f;
    if (n <= sieve.limit()) {
        while (n > 1) {
            std::uint64_t p = sieve.smallest_factor(n);
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
        return f;
    }
    // Trial division by sieved primes; remainder after sqrt(n) is prime.
    for (std::uint64_t p : sieve.primes_up_to(sieve.limit())) {
        if (p * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
    }
    // Remainder is prime as long as n <= limit^2 (the trial-division contract).
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

int a_p(std::uint64_t p) {
    if (p == 2 || p % 2 == 0)
        throw std::invalid_argument("a_p: undefined at p = " + std::to_string(p));
    return ((p - 1) / 2) % 2 == 0 ? +1 : -1;
}

int a_prime_power(std::uint64_t p, unsigned k) {
    if (k == 0) return 1;
    int a = a_p(p);
    return (k % 2 == 0) ? 1 : a;
}

int alpha_prime_power(std::uint64_t p, unsigned k) {
    int sign = (k % 2 == 0) ? +1 : -1;
    return sign * a_prime_power(p, k);
}

int chi(std::uint64_t n) {
    if (n % 2 == 0) return 0;
    return ((n - 1) / 2) % 2 == 0 ? +1 : -1;
}

int chi_product(std::uint64_t n, const PrimeSieve& sieve) {
    if (n % 2 == 0) return 0;
    int v = 1;
    for (auto& [p, e] : factorize(n, sieve).factors) v *= a_prime_power(p, e);
    return v;
}

int liouville(std::uint64_t n, const PrimeSieve& sieve) {
    return factorize(n, sieve).omega_with_multiplicity() % 2 == 0 ? +1 : -1;
}

int chi_hat(std::uint64_t n, const PrimeSieve& sieve) {
    if (n % 2 == 0) return 0;
    return liouville(n, sieve) * chi(n);
}

int chi_hat_product(std::uint64_t n, const PrimeSieve& sieve) {
    if (n % 2 == 0) return 0;
    int v = 1;
    for (auto& [p, e] : factorize(n, sieve).factors) v *= alpha_prime_power(p, e);
    return v;
}

} // namespace conic
