// Acceptance suite: runs every verification family end to end and prints one
// line per criterion. Pass --fast for the reduced smoke configuration used
// during development; the full run is the release gate.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qz/verify.hpp"

int main(int argc, char** argv) {
    qz::VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) {
            opts.fast = true;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            opts.seed = std::stoull(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--fast] [--seed N]\n", argv[0]);
            return 2;
        }
    }

    std::vector<std::string> slugs = qz::check_slugs();
    int failures = 0;
    double total_seconds = 0.0;
    for (size_t i = 0; i < slugs.size(); ++i) {
        qz::CheckResult r = qz::run_check(slugs[i], opts);
        total_seconds += r.seconds;
        if (!r.passed) ++failures;
        std::printf("criterion %zu [%s] %s: %s (%.1fs)\n", i + 1,
                    r.passed ? "PASS" : "FAIL", r.slug.c_str(), r.detail.c_str(),
                    r.seconds);
        std::fflush(stdout);
    }

    std::printf("----------------------------------------\n");
    std::printf("criteria run:    %zu%s\n", slugs.size(), opts.fast ? " (fast mode)" : "");
    std::printf("failures:        %d\n", failures);
    std::printf("total time:      %.1fs\n", total_seconds);
    std::printf("overall:         %s\n", failures == 0 ? "PASS" : "FAIL");
    return failures == 0 ? 0 : 1;
}
