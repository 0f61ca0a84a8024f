#include "conic/counting.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace conic {

namespace {

using u64 = std::uint64_t;

int parity_sign(u64 half) { return (half & 1) ? -1 : +1; }

// (-1)^((q-1)/2) for odd q.
int affine_error_term(const PrimePower& q) {
    return parity_sign((q.q - 1) / 2);
}

// Fast path for prime fields: plain modular arithmetic, square table.
u64 count_affine_prime(u64 p) {
    std::vector<std::uint32_t> sq(p, 0);
    for (u64 y = 0; y < p; ++y) {
        u64 t = static_cast<u64>((unsigned __int128)(y) * y % p);
        ++sq[t];
    }
    u64 count = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 x2 = static_cast<u64>((unsigned __int128)(x) * x % p);
        u64 rhs = (p + 1 - x2) % p; // 1 - x^2
        count += sq[rhs];
    }
    return count;
}

} // namespace

u64 count_affine_bruteforce(const FiniteField& field) {
    const u64 q = field.order();
    if (field.prime_power().n == 1) return count_affine_prime(q);

    std::vector<std::uint32_t> sq(q, 0);
    for (u64 y = 0; y < q; ++y) ++sq[field.mul(y, y)];
    u64 count = 0;
    const auto one = field.one();
    for (u64 x = 0; x < q; ++x) {
        auto rhs = field.sub(one, field.mul(x, x));
        count += sq[rhs];
    }
    return count;
}

u64 count_affine_pairs(const FiniteField& field) {
    const u64 q = field.order();
    if (q > (u64{1} << 10))
        throw std::length_error("count_affine_pairs: q too large for O(q^2) scan");
    u64 count = 0;
    const auto one = field.one();
    for (u64 x = 0; x < q; ++x) {
        auto x2 = field.mul(x, x);
        for (u64 y = 0; y < q; ++y) {
            if (field.add(x2, field.mul(y, y)) == one) ++count;
        }
    }
    return count;
}

u64 count_affine_formula(const PrimePower& q) {
    if (q.p == 2) return q.q;
    return q.q - affine_error_term(q);
}

u64 count_infinity(const PrimePower& q) {
    if (q.p == 2) return 1;
    return 1 + affine_error_term(q);
}

PointCount count_total(const PrimePower& q, u64 crosscheck_bound) {
    PointCount pc;
    pc.q = q;
    pc.affine = count_affine_formula(q);
    pc.infinity = count_infinity(q);
    pc.total = pc.affine + pc.infinity;
    pc.affine_error = static_cast<int>(static_cast<std::int64_t>(q.q) -
                                       static_cast<std::int64_t>(pc.affine));
    pc.infinity_error = static_cast<int>(1 - static_cast<std::int64_t>(pc.infinity));
    if (q.q <= crosscheck_bound) {
        FiniteField field(q, crosscheck_bound);
        u64 brute = count_affine_bruteforce(field);
        if (brute != pc.affine)
            throw std::logic_error("count_total: formula " +
                                   std::to_string(pc.affine) +
                                   " disagrees with brute force " +
                                   std::to_string(brute) + " at q = " +
                                   std::to_string(q.q));
    }
    return pc;
}

u64 power_sum_mod_p(u64 p, u64 k) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("power_sum_mod_p: p must be an odd prime");
    if (k == 0) return 0;
    return (k % (p - 1) == 0) ? p - 1 : 0;
}

std::vector<PointCount> scan_primes(u64 limit, unsigned workers,
                                    u64 crosscheck_bound) {
    std::vector<PointCount> out;
    if (limit < 3) return out;

    // Plain odd-prime list via Eratosthenes.
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> primes;
    for (u64 i = 3; i <= limit; i += 2) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i <= limit / i)
            for (u64 j = i * i; j <= limit; j += 2 * i) composite[j] = true;
    }

    if (workers < 1) workers = 1;
    const size_t count = primes.size();
    out.resize(count);
    std::atomic<u64> failed_at{0};
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            PrimePower q{primes[i], 1, primes[i]};
            PointCount pc;
            pc.q = q;
            pc.affine = count_affine_formula(q);
            pc.infinity = count_infinity(q);
            pc.total = pc.affine + pc.infinity;
            pc.affine_error = affine_error_term(q);
            pc.infinity_error = -pc.affine_error;
            if (q.q <= crosscheck_bound) {
                u64 brute = count_affine_prime(q.q);
                if (brute != pc.affine) failed_at.store(q.q);
            }
            out[i] = pc;
        }
    };
    if (workers == 1 || count < 2 * workers) {
        work(0, count);
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            size_t lo = w * chunk, hi = std::min(count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    if (u64 bad = failed_at.load())
        throw std::logic_error("scan_primes: cross-check failed at p = " +
                               std::to_string(bad));
    return out;
}

} // namespace conic
