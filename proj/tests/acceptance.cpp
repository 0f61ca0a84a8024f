// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>

#include "conic/counting.hpp"
#include "conic/identities.hpp"
#include "conic/report.hpp"

using namespace conic;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string(CONIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) { exit_code = -1; return {}; }
    std::string out;
    std::array<char, 65536> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

void criterion_1_counting_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::uint64_t records = 0;
    for (std::uint64_t p = 2; p <= 4096 && ok; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned n = 1;; ++n) {
            std::uint64_t q = 1;
            bool over = false;
            for (unsigned i = 0; i < n; ++i) {
                q *= p;
                if (q > 4096) { over = true; break; }
            }
            if (over) break;
            auto pp = PrimePower::make(p, n);
            FiniteField field(pp);
            if (count_affine_bruteforce(field) != count_affine_formula(pp))
                ok = false;
            if (count_total(pp).total != q + 1) ok = false;
            ++records;
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0).count();
    report(1, "counting oracle equivalence, all q <= 4096", ok,
           std::to_string(records) + " prime powers, " +
               std::to_string(secs) + " s");
}

void criterion_2_splice() {
    bool ok = true;
    for (const auto& pc : scan_primes(4096))
        if (a_p(pc.q.p) != pc.affine_error) ok = false;
    report(2, "a_p equals measured affine error, odd p <= 4096", ok);
}

void criterion_3_zeta_at_1() {
    double v = zeta_accelerated(1.0, 64).value;
    double err = std::abs(v - kPi / 4);
    report(3, "zeta(M,1) = pi/4 within 1e-12", err <= 1e-12,
           "err = " + std::to_string(err));
}

void criterion_4_zeta_hat_at_1() {
    double cf = zeta_hat_closed_form(1.0).value;
    double cf_err = std::abs(cf - kPi / 2);
    auto prod = euler_product(SeriesKind::zeta_hat, 1.0, 10'000'000);
    double prod_err = std::abs(prod.value - kPi / 2);
    bool ok = cf_err <= 1e-10 && prod_err <= Defaults::euler_product_floor;
    report(4, "zeta_hat(M,1) = pi/2 (closed form 1e-10, product 5e-4)", ok,
           "closed err = " + std::to_string(cf_err) +
               ", product err = " + std::to_string(prod_err));
}

void criterion_5_functional_equation() {
    bool ok = true;
    double max_err = 0.0;
    for (double s : {1.0, 1.25, 1.5, 2.0}) {
        auto c = functional_equation_check(s, 1e-8);
        max_err = std::max(max_err, std::abs(c.lhs.value - c.rhs.value));
        ok = ok && c.passed;
    }
    double prod1 = zeta_accelerated(1.0).value * zeta_hat_closed_form(1.0).value;
    double pi2_err = std::abs(prod1 - kPi * kPi / 8.0);
    ok = ok && pi2_err <= 1e-10;
    report(5, "functional equation at s in {1, 1.25, 1.5, 2}", ok,
           "max err = " + std::to_string(max_err) +
               ", pi^2/8 err = " + std::to_string(pi2_err));
}

void criterion_6_wallis() {
    bool ok = true;
    double max_err = 0.0;
    for (unsigned k = 0; k <= 20; ++k) {
        double rec = wallis(2 * k);
        double quad = integrate(
                          [k](double x) {
                              return std::pow(std::cos(x), 2.0 * double(k));
                          },
                          0.0, kPi / 2, 1e-12)
                          .value;
        double closed = double_factorial_ratio(k) *
                        (2.0 * zeta_accelerated(1.0).value);
        double e = std::max(std::abs(rec - quad), std::abs(rec - closed));
        max_err = std::max(max_err, e);
        ok = ok && e <= 1e-10;
    }
    report(6, "Wallis suite, k <= 20, pairwise 1e-10", ok,
           "max err = " + std::to_string(max_err));
}

void criterion_7_log_kernel() {
    bool ok = true;
    double max_err = 0.0;
    for (unsigned k = 0; k <= 20; ++k) {
        double n = double(2 * k + 1);
        double e = std::abs(log_kernel_integral(k).value - 1.0 / (n * n));
        max_err = std::max(max_err, e);
        ok = ok && e <= 1e-10;
    }
    report(7, "log-kernel integral, k <= 20, 1e-10", ok,
           "max err = " + std::to_string(max_err));
}

void criterion_8_period_chain() {
    auto pc = period_chain_check(1e-6, 1e-10);
    report(8, "period chain: four routes to pi/2 agree", pc.passed,
           "quad = " + std::to_string(pc.quadrature_leg) +
               ", series = " + std::to_string(pc.series_leg) +
               ", ratio = " + std::to_string(pc.ratio_leg) +
               ", zeta_hat = " + std::to_string(pc.zeta_hat_leg));
}

void criterion_9_character_laws() {
    PrimeSieve sieve(100000);
    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<std::uint64_t> pick(1, 316);
    bool ok = true;
    int tested = 0;
    while (tested < 10000) {
        std::uint64_t r = pick(rng), s = pick(rng);
        if (std::gcd(r, s) != 1 || r * s > 100000) continue;
        if (chi(r * s) != chi(r) * chi(s)) ok = false;
        if (chi_hat(r * s, sieve) != chi_hat(r, sieve) * chi_hat(s, sieve))
            ok = false;
        ++tested;
    }
    for (std::uint64_t p : sieve.primes_up_to(1000)) {
        if (p == 2) continue;
        for (unsigned k = 1; k <= 6; ++k) {
            if (a_prime_power(p, k) !=
                a_prime_power(p, k - 1) * a_prime_power(p, 1))
                ok = false;
            if (alpha_prime_power(p, k) !=
                alpha_prime_power(p, k - 1) * alpha_prime_power(p, 1))
                ok = false;
        }
    }
    report(9, "character multiplicativity and recurrences", ok);
}

void criterion_10_determinism() {
    int rc1 = 0, rc8 = 0;
    std::string one = run_cli("count --scan 100000 --workers 1", rc1);
    std::string eight = run_cli("count --scan 100000 --workers 8", rc8);
    bool ok = rc1 == 0 && rc8 == 0 && !one.empty() && one == eight;
    report(10, "scan CSV byte-identical across worker counts", ok,
           std::to_string(one.size()) + " bytes");
}

} // namespace

int main() {
    criterion_1_counting_oracle();
    criterion_2_splice();
    criterion_3_zeta_at_1();
    criterion_4_zeta_hat_at_1();
    criterion_5_functional_equation();
    criterion_6_wallis();
    criterion_7_log_kernel();
    criterion_8_period_chain();
    criterion_9_character_laws();
    criterion_10_determinism();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
