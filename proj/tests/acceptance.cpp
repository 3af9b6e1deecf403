// Headline verification suite: prints one PASS/FAIL line per criterion and
// exits nonzero if any fail.

#include <cstdio>

#include "pointscat/checks.hpp"

int main() {
    int failures = 0;
    for (const pointscat::CheckResult& r : pointscat::run_acceptance_checks()) {
        std::printf("%s: %s (%s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        if (!r.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
