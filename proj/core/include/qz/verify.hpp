#pragma once

// The cross-verification suite: every check compares two or more independent
// computations (brute-force enumeration vs closed form, search vs valuation
// formula, direct partition counts vs generating-function coefficients, ...)
// at fixed desk scales. Each check returns pass/fail plus a human-readable
// detail line; a failure never throws out of the runner.

#include <string>
#include <vector>

namespace qz {

struct CheckResult {
    std::string slug;
    std::string title;
    bool passed = false;
    std::string detail;  // summary statistics, or the first disagreement
    double seconds = 0.0;
};

struct VerifyOptions {
    bool fast = false;                  // reduced scales for quick runs
    unsigned long long seed = 20240901; // for the randomized tuple checks
};

std::vector<std::string> check_slugs();

// Runs one named check (throws Error for an unknown slug).
CheckResult run_check(const std::string& slug, const VerifyOptions& opts = {});

// Runs the whole suite in order.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});

std::string checks_report_json(const std::vector<CheckResult>& results,
                               const VerifyOptions& opts);

}  // namespace qz
