// conic: point counts, L-type series, and integral identities for the
// circle x^2 + y^2 = z^2 over finite fields.
//
// Subcommands:
//   count   one prime power or a prime scan; CSV output
//   series  evaluate zeta(M,s) / zeta_hat(M,s) by various methods; JSON
//   verify  run identity suites and write a JSON report
//
// Exit codes: 0 success, 1 usage, 2 verification failure, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conic/config.hpp"
#include "conic/counting.hpp"
#include "conic/identities.hpp"
#include "conic/report.hpp"

namespace {

using conic::Defaults;

// Split q into (p, n) or fail.
std::optional<conic::PrimePower> parse_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    unsigned n = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) { rest /= p; ++n; }
    if (rest != 1) return std::nullopt;
    return conic::PrimePower::make(p, n);
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << "\n";
        return 3;
    }
    out << content;
    return out.good() ? 0 : 3;
}

std::string csv_row(const conic::PointCount& pc) {
    std::ostringstream os;
    os << pc.q.q << ',' << pc.q.p << ',' << pc.q.n << ',' << pc.affine << ','
       << pc.infinity << ',' << pc.total << ',' << pc.affine_error << '\n';
    return os.str();
}

nlohmann::json estimate_json(const char* series, const conic::SeriesEstimate& e) {
    return nlohmann::json{
        {"series", series},       {"s", e.s},
        {"method", conic::method_name(e.method)},
        {"value", e.value},       {"cutoff", e.cutoff},
        {"error_proxy", e.error_proxy},
    };
}

int run_count(std::uint64_t q, std::uint64_t scan, unsigned workers,
              std::uint64_t enum_bound, const std::string& out_path) {
    std::string body;
    try {
        if (scan > 0) {
            for (auto& pc : conic::scan_primes(scan, workers, enum_bound))
                body += csv_row(pc);
        } else {
            auto pp = parse_prime_power(q);
            if (!pp) {
                std::cerr << "error: " << q << " is not a prime power\n";
                return 1;
            }
            body = csv_row(conic::count_total(*pp, enum_bound));
        }
    } catch (const std::logic_error& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 2;
    }
    return write_output(out_path, body);
}

int run_series(const std::string& which, double s, std::uint64_t terms,
               std::uint64_t primes, const std::string& method,
               std::uint64_t sieve_limit, const std::string& out_path) {
    conic::SeriesEstimate e;
    const char* name = which.c_str();
    try {
        if (which == "zeta") {
            if (method == "partial") e = conic::zeta_partial(s, terms);
            else if (method == "accelerated")
                e = conic::zeta_accelerated(s, static_cast<unsigned>(terms));
            else if (method == "euler-product")
                e = conic::euler_product(conic::SeriesKind::zeta, s, primes);
            else {
                std::cerr << "error: unsupported method '" << method
                          << "' for zeta\n";
                return 1;
            }
        } else if (which == "zeta-hat") {
            if (method == "partial") {
                std::uint64_t need = std::max<std::uint64_t>(2 * terms + 1, 3);
                conic::PrimeSieve sieve(std::min(need, sieve_limit));
                e = conic::zeta_hat_partial(s, terms, sieve);
            } else if (method == "closed-form")
                e = conic::zeta_hat_closed_form(s);
            else if (method == "euler-product")
                e = conic::euler_product(conic::SeriesKind::zeta_hat, s, primes);
            else {
                std::cerr << "error: unsupported method '" << method
                          << "' for zeta-hat\n";
                return 1;
            }
        } else {
            std::cerr << "error: unknown series '" << which << "'\n";
            return 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return write_output(out_path, estimate_json(name, e).dump(2) + "\n");
}

int run_verify(const std::string& suite, double tol, const std::string& report_path,
               std::uint64_t prime_limit, std::uint64_t product_bound) {
    conic::SuiteOptions opt;
    opt.tol = tol;
    opt.prime_limit = prime_limit;
    opt.euler_product_bound = product_bound;

    conic::VerificationReport rep;
    if (suite == "counting") rep = conic::run_counting_suite(opt);
    else if (suite == "lseries") rep = conic::run_lseries_suite(opt);
    else if (suite == "analysis") rep = conic::run_analysis_suite(opt);
    else if (suite == "all") rep = conic::run_all_suites(opt);
    else {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 1;
    }

    for (auto& c : rep.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.identity_id
                  << "  lhs=" << c.lhs.value << " rhs=" << c.rhs.value
                  << " tol=" << c.tolerance << "\n";
    }
    if (!report_path.empty()) {
        int rc = write_output(report_path,
                              conic::report_to_json(rep).dump(2) + "\n");
        if (rc != 0) return rc;
    }
    return rep.all_passed() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle point counts, L-type series, and period identities"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "point counts over F_q");
    std::uint64_t q = 0, scan = 0;
    unsigned workers = 1;
    std::uint64_t enum_bound = Defaults::enumeration_bound;
    std::string count_out;
    count->add_option("q", q, "prime power q");
    count->add_option("--scan", scan, "count for every odd prime <= limit");
    count->add_option("--workers", workers, "worker threads")->default_val(1);
    count->add_option("--enum-bound", enum_bound, "brute-force cross-check bound")
        ->default_val(Defaults::enumeration_bound);
    count->add_option("--out", count_out, "output file (default stdout)");

    // series
    auto* series = app.add_subcommand("series", "evaluate an L-type series");
    std::string which, method = "partial";
    double s = 1.0;
    std::uint64_t terms = 64, primes = 1000, sieve_limit = Defaults::sieve_limit;
    std::string series_out;
    series->add_option("which", which, "zeta | zeta-hat")->required();
    series->add_option("--s", s, "real series parameter")->default_val(1.0);
    series->add_option("--terms", terms, "term cutoff")->default_val(64);
    series->add_option("--primes", primes, "prime bound for Euler products")
        ->default_val(1000);
    series->add_option("--method", method,
                       "partial | accelerated | euler-product | closed-form")
        ->default_val("partial");
    series->add_option("--sieve-limit", sieve_limit, "character sieve limit")
        ->default_val(Defaults::sieve_limit);
    series->add_option("--out", series_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity suites");
    std::string suite = "all", report_path;
    double tol = 0.0;
    std::uint64_t prime_limit = 4096;
    std::uint64_t product_bound = Defaults::euler_product_bound;
    verify->add_option("--suite", suite, "counting | lseries | analysis | all")
        ->default_val("all");
    verify->add_option("--tol", tol, "tolerance override (0 = per-check default)")
        ->default_val(0.0);
    verify->add_option("--report", report_path, "JSON report path");
    verify->add_option("--prime-limit", prime_limit,
                       "prime-power bound for the counting suite")
        ->default_val(4096);
    verify->add_option("--primes", product_bound,
                       "prime bound for the zeta-hat Euler product")
        ->default_val(Defaults::euler_product_bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (count->parsed()) {
        if (q == 0 && scan == 0) {
            std::cerr << "error: give q or --scan\n";
            return 1;
        }
        return run_count(q, scan, workers, enum_bound, count_out);
    }
    if (series->parsed())
        return run_series(which, s, terms, primes, method, sieve_limit,
                          series_out);
    if (verify->parsed())
        return run_verify(suite, tol, report_path, prime_limit, product_bound);
    return 1;
}
