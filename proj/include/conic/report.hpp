#ifndef CONIC_REPORT_HPP
#define CONIC_REPORT_HPP

#include <string>
#include <vector>

#include "conic/series.hpp"

#include <json.hpp>

namespace conic {

struct VerificationReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const {
        for (auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Suite options. tol = 0 keeps per-check defaults; a positive tol replaces
// them where legal (the Euler-product check never drops below its
// calibrated floor).
struct SuiteOptions {
    double tol = 0.0;
    std::uint64_t prime_limit = 4096;                              // counting
    std::uint64_t euler_product_bound = Defaults::euler_product_bound;
};

VerificationReport run_counting_suite(const SuiteOptions& opt = {});
VerificationReport run_lseries_suite(const SuiteOptions& opt = {});
VerificationReport run_analysis_suite(const SuiteOptions& opt = {});
VerificationReport run_all_suites(const SuiteOptions& opt = {});

nlohmann::json check_to_json(const IdentityCheck& c);
nlohmann::json report_to_json(const VerificationReport& r);

} // namespace conic

#endif
