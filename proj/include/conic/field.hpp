#ifndef CONIC_FIELD_HPP
#define CONIC_FIELD_HPP

#include <cstdint>
#include <vector>

#include "conic/config.hpp"

namespace conic {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// A prime power q = p^n. Construction rejects non-primes and overflow.
struct PrimePower {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t q = 0;

    static PrimePower make(std::uint64_t p, unsigned n);
    bool odd() const { return p != 2; }
};

// Dense polynomial over F_p, coefficients lowest degree first.
// Invariant: no trailing zero coefficients (zero polynomial is empty).
struct Poly {
    std::vector<std::uint32_t> c;

    Poly() = default;
    explicit Poly(std::vector<std::uint32_t> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool monic() const { return !c.empty() && c.back() == 1; }
    void trim();

    bool operator==(const Poly& o) const = default;
};

// x as a polynomial.
Poly poly_x();

Poly poly_add(const Poly& a, const Poly& b, std::uint64_t p);
Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p);
// Remainder of a modulo monic m.
Poly poly_mod(const Poly& a, const Poly& m, std::uint64_t p);
Poly poly_gcd(Poly a, Poly b, std::uint64_t p);
// a^e mod m, e a plain 64-bit exponent.
Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& m, std::uint64_t p);

// Irreducibility over F_p by the Frobenius criterion:
// x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
// Throws std::invalid_argument for non-monic or constant input.
bool is_irreducible(const Poly& f, std::uint64_t p);

// Lexicographically smallest monic irreducible of degree n over F_p,
// scanning lower coefficients as a base-p counter (constant term least
// significant). Deterministic by construction.
Poly find_irreducible(std::uint64_t p, unsigned n);

// F_{p^n} realized as F_p[x]/(modulus). Elements are indices in [0, q):
// the element sum c_i x^i has index sum c_i p^i. Immutable after
// construction; all operations are const and safe to share across threads.
class FiniteField {
public:
    using Elem = std::uint64_t;

    explicit FiniteField(PrimePower pp,
                         std::uint64_t enum_bound = Defaults::enumeration_bound);
    FiniteField(PrimePower pp, Poly modulus,
                std::uint64_t enum_bound = Defaults::enumeration_bound);

    const PrimePower& prime_power() const { return pp_; }
    const Poly& modulus() const { return mod_; }
    std::uint64_t order() const { return pp_.q; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // The residue class of x; equals the index p (or the integer case n = 1).
    Elem gen() const { return pp_.n > 1 ? pp_.p : 1; }
    Elem from_integer(std::uint64_t v) const { return v % pp_.p; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;          // throws std::domain_error on 0
    Elem pow(Elem a, std::uint64_t e) const;

    // All q elements in ascending index order.
    std::vector<Elem> enumerate() const;

    Poly to_poly(Elem a) const;
    Elem from_poly(const Poly& f) const;

private:
    PrimePower pp_;
    Poly mod_;
};

} // namespace conic

#endif
