// Acceptance suite: runs every criterion with pinned expected values and
// exact integer comparisons, printing one pass/fail line per criterion.

#include <cstdio>

#include "liecoh/verify.hpp"

int main() {
    using liecoh::verify::CheckResult;
    int failures = 0;
    for (const CheckResult& r : liecoh::verify::run_all()) {
        std::printf("%s  %s — %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.detail.c_str());
        if (!r.pass)
            ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
