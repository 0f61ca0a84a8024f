#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "conic/characters.hpp"
#include "conic/counting.hpp"

using namespace conic;

TEST_CASE("sieve matches trial division") {
    PrimeSieve sieve(10000);
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        std::uint64_t d = 2;
        while (n % d != 0) ++d;
        CHECK(sieve.smallest_factor(n) == d);
    }
}

TEST_CASE("factorize") {
    PrimeSieve sieve(1000);
    auto f = factorize(360, sieve);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(f.factors[1] == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(f.factors[2] == std::pair<std::uint64_t, unsigned>{5, 1});

    CHECK(factorize(97, sieve).factors ==
          std::vector<std::pair<std::uint64_t, unsigned>>{{97, 1}});
    CHECK(factorize(1, sieve).factors.empty());
    CHECK_THROWS_AS(factorize(0, sieve), std::invalid_argument);

    // beyond the sieve limit: trial division fallback
    auto big = factorize(1009 * 997, sieve);
    REQUIRE(big.factors.size() == 2);
    CHECK(big.factors[0].first == 997);
    CHECK(big.factors[1].first == 1009);
}

TEST_CASE("a_p examples and splice with counting") {
    CHECK(a_p(5) == +1);
    CHECK(a_p(3) == -1);
    CHECK(a_p(13) == +1);
    CHECK_THROWS_AS(a_p(2), std::invalid_argument);

    for (const auto& pc : scan_primes(4096))
        CHECK(a_p(pc.q.p) == pc.affine_error);
}

TEST_CASE("prime power characters") {
    CHECK(a_prime_power(3, 2) == +1);
    CHECK(a_prime_power(3, 0) == +1);
    CHECK(a_prime_power(7, 3) == -1);
    // direct evaluation (-1)^((p^k-1)/2)
    CHECK(a_prime_power(3, 2) == (((9 - 1) / 2) % 2 ? -1 : 1));
    CHECK(a_prime_power(7, 3) == (((343 - 1) / 2) % 2 ? -1 : 1));

    CHECK(alpha_prime_power(3, 1) == +1);
    CHECK(alpha_prime_power(5, 1) == -1);
    CHECK(alpha_prime_power(3, 2) == +1);
}

TEST_CASE("alpha recurrence") {
    PrimeSieve sieve(1000);
    for (std::uint64_t p : sieve.primes_up_to(1000)) {
        if (p == 2) continue;
        for (unsigned k = 1; k <= 6; ++k) {
            CHECK(alpha_prime_power(p, k) ==
                  alpha_prime_power(p, k - 1) * alpha_prime_power(p, 1));
            CHECK(a_prime_power(p, k) ==
                  a_prime_power(p, k - 1) * a_prime_power(p, 1));
        }
    }
}

TEST_CASE("chi examples") {
    CHECK(chi(1) == +1);
    CHECK(chi(15) == -1); // a_3 * a_5 = (-1)(+1); also (-1)^7
    CHECK(chi(9) == +1);
    CHECK(chi(4) == 0);
}

TEST_CASE("chi_hat examples") {
    PrimeSieve sieve(100);
    CHECK(chi_hat(1, sieve) == +1);
    CHECK(chi_hat(3, sieve) == +1);
    CHECK(chi_hat(45, sieve) == -1);
    CHECK(chi_hat(6, sieve) == 0);
}

TEST_CASE("closed form vs factorization product, odd n to 1e6") {
    PrimeSieve sieve(1000000);
    for (std::uint64_t n = 1; n <= 1000000; n += 2) {
        CHECK(chi(n) == chi_product(n, sieve));
        CHECK(chi_hat(n, sieve) == chi_hat_product(n, sieve));
    }
}

TEST_CASE("multiplicativity on coprime pairs") {
    PrimeSieve sieve(100000);
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<std::uint64_t> pick(1, 316);
    int tested = 0;
    while (tested < 2000) {
        std::uint64_t r = pick(rng), s = pick(rng);
        if (std::gcd(r, s) != 1 || r * s > 100000) continue;
        CHECK(chi(r * s) == chi(r) * chi(s));
        CHECK(chi_hat(r * s, sieve) == chi_hat(r, sieve) * chi_hat(s, sieve));
        ++tested;
    }
}
