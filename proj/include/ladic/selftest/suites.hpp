#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ladic {

enum class SuiteStatus { pass, fail, undecided };

struct SuiteResult {
    int criterion = 0;
    std::string name;
    SuiteStatus status = SuiteStatus::pass;
    int checks = 0;
    std::string detail; // first failed invariant, or why the suite could not decide
    double seconds = 0; // wall time, not part of the deterministic report
};

struct SelftestOptions {
    bool full = false;
    std::optional<int> precision; // overrides the working precision of the p-adic suites
    std::uint64_t seed = 1;
};

constexpr int kSuiteCount = 9;

std::string suite_name(int criterion);
SuiteResult run_suite(int criterion, const SelftestOptions& opts);
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

// 0 pass, 1 fail, 3 undecided
int exit_code(SuiteStatus s);
// fail beats undecided beats pass
int selftest_exit_code(const std::vector<SuiteResult>& results);
std::string to_string(SuiteStatus s);

} // namespace ladic
