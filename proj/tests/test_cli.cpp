#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CONIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("count single prime power") {
    auto r = run("count 9");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9,3,2,8,2,10,1\n");

    auto f4 = run("count 4");
    CHECK(f4.exit_code == 0);
    CHECK(f4.out == "4,2,2,4,1,5,0\n");
}

TEST_CASE("count rejects malformed q") {
    CHECK(run("count 12").exit_code == 1);
    CHECK(run("count 1").exit_code == 1);
    CHECK(run("count").exit_code == 1);
}

TEST_CASE("count scan emits one row per odd prime") {
    auto r = run("count --scan 100");
    CHECK(r.exit_code == 0);
    size_t rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows == 24); // pi(100) = 25, minus p = 2
}

TEST_CASE("scan output is byte-identical across worker counts") {
    auto one = run("count --scan 5000 --workers 1");
    auto eight = run("count --scan 5000 --workers 8");
    CHECK(one.exit_code == 0);
    CHECK(eight.exit_code == 0);
    CHECK(one.out == eight.out);
}

TEST_CASE("series prints a JSON estimate") {
    auto r = run("series zeta --s 1 --method accelerated --terms 64");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["series"] == "zeta");
    CHECK(j["method"] == "accelerated_sum");
    CHECK(std::abs(j["value"].get<double>() - 0.785398163397448) < 1e-12);

    auto cf = run("series zeta-hat --s 1 --method closed-form");
    auto jcf = nlohmann::json::parse(cf.out);
    CHECK(std::abs(jcf["value"].get<double>() - 1.570796326794897) < 1e-10);
}

TEST_CASE("series rejects unsupported combinations") {
    CHECK(run("series zeta --method closed-form").exit_code == 1);
    CHECK(run("series zeta-hat --method accelerated").exit_code == 1);
    CHECK(run("series nope").exit_code == 1);
}

TEST_CASE("verify analysis suite reports and passes") {
    auto r = run("verify --suite analysis --report /tmp/conic_analysis.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS analysis.wallis_k0") != std::string::npos);
    CHECK(r.out.find("analysis.log_kernel_k20") != std::string::npos);
    CHECK(r.out.find("analysis.period_chain.") != std::string::npos);

    std::ifstream in("/tmp/conic_analysis.json");
    REQUIRE(in.good());
    nlohmann::json rep = nlohmann::json::parse(in);
    CHECK(rep["all_passed"] == true);
    const auto& c0 = rep["checks"][0];
    for (const char* key : {"identity_id", "s", "lhs", "rhs", "abs_diff",
                            "tolerance", "method_lhs", "method_rhs", "cutoff",
                            "passed"})
        CHECK(c0.contains(key));
}

TEST_CASE("verify counting suite includes the splice check") {
    auto r = run("verify --suite counting --prime-limit 512");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("counting.a_p_matches_affine_error") != std::string::npos);
    CHECK(r.out.find("counting.affine_error_exponent_is_q_minus_1_half") !=
          std::string::npos);
}

TEST_CASE("verify reports I/O failure as exit 3") {
    auto r = run("verify --suite counting --prime-limit 64 "
                 "--report /nonexistent-dir/report.json");
    CHECK(r.exit_code == 3);
}
