#include "conic/field.hpp"

#include <stdexcept>
#include <string>

namespace conic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(u128(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses are exact for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimePower PrimePower::make(u64 p, unsigned n) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimePower: p = " + std::to_string(p) +
                                    " is not prime");
    if (n < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
    u64 q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > UINT64_MAX / p)
            throw std::overflow_error("PrimePower: p^n overflows 64 bits");
        q *= p;
    }
    return PrimePower{p, n, q};
}

Poly::Poly(std::vector<std::uint32_t> coeffs) : c(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly poly_x() { return Poly{{0, 1}}; }

Poly poly_add(const Poly& a, const Poly& b, u64 p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 s = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
        r.c[i] = static_cast<std::uint32_t>(s % p);
    }
    r.trim();
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, u64 p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 s = (i < a.c.size() ? a.c[i] : 0) + p - (i < b.c.size() ? b.c[i] : 0);
        r.c[i] = static_cast<std::uint32_t>(s % p);
    }
    r.trim();
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<u64> acc(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        for (size_t j = 0; j < b.c.size(); ++j) {
            acc[i + j] = (acc[i + j] + u64(a.c[i]) * b.c[j]) % p;
        }
    }
    Poly r;
    r.c.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

Poly poly_mod(const Poly& a, const Poly& m, u64 p) {
    if (!m.monic()) throw std::invalid_argument("poly_mod: modulus must be monic");
    std::vector<u64> r(a.c.begin(), a.c.end());
    const int dm = m.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
        u64 lead = r[i] % p;
        if (lead == 0) continue;
        r[i] = 0;
        for (int j = 0; j < dm; ++j) {
            r[i - dm + j] = (r[i - dm + j] + (p - m.c[j] % p) * lead) % p;
        }
    }
    Poly out;
    out.c.reserve(dm);
    for (int j = 0; j < dm && j < static_cast<int>(r.size()); ++j)
        out.c.push_back(static_cast<std::uint32_t>(r[j] % p));
    out.trim();
    return out;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    while (!b.is_zero()) {
        // Make b monic so poly_mod applies.
        u64 lead = b.c.back();
        if (lead != 1) {
            u64 inv = powmod(lead, p - 2, p);
            for (auto& ci : b.c) ci = static_cast<std::uint32_t>(ci * inv % p);
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) {
        u64 inv = powmod(a.c.back(), p - 2, p);
        for (auto& ci : a.c) ci = static_cast<std::uint32_t>(ci * inv % p);
    }
    return a;
}

Poly poly_powmod(const Poly& a, u64 e, const Poly& m, u64 p) {
    Poly base = poly_mod(a, m, p);
    Poly r{{1}};
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f, u64 p) {
    if (f.is_zero() || !f.monic() || f.degree() < 1)
        throw std::invalid_argument(
            "is_irreducible: polynomial must be monic of degree >= 1");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;

    // Frobenius powers x^(p^k) mod f, iterated to avoid huge exponents.
    const Poly x = poly_x();
    std::vector<Poly> frob(n + 1);
    frob[0] = poly_mod(x, f, p);
    for (unsigned k = 1; k <= n; ++k)
        frob[k] = poly_powmod(frob[k - 1], p, f, p);

    if (!(frob[n] == poly_mod(x, f, p))) return false;

    unsigned m = n;
    for (unsigned r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        Poly g = poly_gcd(poly_sub(frob[n / r], x, p), f, p);
        if (g.degree() != 0) return false;
        while (m % r == 0) m /= r;
    }
    if (m > 1) {
        Poly g = poly_gcd(poly_sub(frob[n / m], x, p), f, p);
        if (g.degree() != 0) return false;
    }
    return true;
}

Poly find_irreducible(u64 p, unsigned n) {
    if (n < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    // Candidates are x^n + (lower part), lower part enumerated as a base-p
    // counter with the constant term least significant.
    for (u64 t = 0;; ++t) {
        Poly f;
        f.c.assign(n + 1, 0);
        u64 v = t;
        for (unsigned i = 0; i < n; ++i) {
            f.c[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (v != 0)
            throw std::logic_error("find_irreducible: scan exhausted");
        f.c[n] = 1;
        if (is_irreducible(f, p)) return f;
    }
}

FiniteField::FiniteField(PrimePower pp, std::uint64_t enum_bound)
    : FiniteField(pp, find_irreducible(pp.p, pp.n), enum_bound) {}

FiniteField::FiniteField(PrimePower pp, Poly modulus, std::uint64_t enum_bound)
    : pp_(pp), mod_(std::move(modulus)) {
    if (pp_.q > enum_bound)
        throw std::length_error("FiniteField: q = " + std::to_string(pp_.q) +
                                " exceeds enumeration bound");
    if (mod_.degree() != static_cast<int>(pp_.n) || !mod_.monic())
        throw std::invalid_argument("FiniteField: modulus must be monic of degree n");
    if (!is_irreducible(mod_, pp_.p))
        throw std::invalid_argument("FiniteField: modulus is reducible");
}

Poly FiniteField::to_poly(Elem a) const {
    Poly f;
    f.c.reserve(pp_.n);
    for (unsigned i = 0; i < pp_.n; ++i) {
        f.c.push_back(static_cast<std::uint32_t>(a % pp_.p));
        a /= pp_.p;
    }
    f.trim();
    return f;
}

FiniteField::Elem FiniteField::from_poly(const Poly& f) const {
    Poly r = poly_mod(f, mod_, pp_.p);
    Elem idx = 0;
    for (size_t i = r.c.size(); i-- > 0;) idx = idx * pp_.p + r.c[i];
    return idx;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
    Elem out = 0, mult = 1;
    for (unsigned i = 0; i < pp_.n; ++i) {
        u64 s = (a % pp_.p + b % pp_.p) % pp_.p;
        out += s * mult;
        mult *= pp_.p;
        a /= pp_.p;
        b /= pp_.p;
    }
    return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
    Elem out = 0, mult = 1;
    for (unsigned i = 0; i < pp_.n; ++i) {
        u64 s = (a % pp_.p + pp_.p - b % pp_.p) % pp_.p;
        out += s * mult;
        mult *= pp_.p;
        a /= pp_.p;
        b /= pp_.p;
    }
    return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const { return sub(0, a); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
    if (pp_.n == 1) return mulmod(a, b, pp_.p);
    return from_poly(poly_mul(to_poly(a), to_poly(b), pp_.p));
}

FiniteField::Elem FiniteField::pow(Elem a, u64 e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("FiniteField::inv: division by zero");
    return pow(a, pp_.q - 2);
}

std::vector<FiniteField::Elem> FiniteField::enumerate() const {
    std::vector<Elem> all(pp_.q);
    for (u64 i = 0; i < pp_.q; ++i) all[i] = i;
    return all;
}

} // namespace conic
