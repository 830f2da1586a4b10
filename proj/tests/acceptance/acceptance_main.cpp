// One line per acceptance criterion: the full-profile suite must pass within its time limit.
#include <cstdio>

#include "ladic/selftest/suites.hpp"

int main()
{
    static const double limits[ladic::kSuiteCount] = {30, 60, 60, 30, 120, 30, 120, 120, 60};
    ladic::SelftestOptions opts;
    opts.full = true;
    int failures = 0;
    for (int k = 1; k <= ladic::kSuiteCount; ++k) {
        const auto r = ladic::run_suite(k, opts);
        const double limit = limits[k - 1];
        const bool ok = r.status == ladic::SuiteStatus::pass && r.seconds <= limit;
        failures += !ok;
        std::printf("criterion %d %s: %s checks=%d time=%.2fs limit=%.0fs", k, r.name.c_str(), ok ? "PASS" : "FAIL", r.checks, r.seconds, limit);
        if (r.status != ladic::SuiteStatus::pass) std::printf(" status=%s (%s)", ladic::to_string(r.status).c_str(), r.detail.c_str());
        else if (r.seconds > limit) std::printf(" (over the time limit)");
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", ladic::kSuiteCount - failures, ladic::kSuiteCount);
    return failures ? 1 : 0;
}
