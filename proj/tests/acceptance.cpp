// Acceptance gate: runs every verification suite and prints one pass/fail
// line per criterion. Exit code 0 only when everything is green.
#include <cstdio>

#include "abszeta/io.hpp"
#include "abszeta/verify.hpp"

int main() {
    const auto suites = abszeta::run_all_verify_suites();
    bool all_passed = true;
    int index = 0;
    for (const auto& suite : suites) {
        ++index;
        const bool ok = suite.passed();
        all_passed = all_passed && ok;
        std::printf("[%s] criterion %2d: %-28s %s (%zu checks, %.1f ms)\n", ok ? "PASS" : "FAIL",
                    index, suite.name.c_str(), suite.description.c_str(), suite.reports.size(),
                    suite.elapsed_ms);
        if (!ok) {
            for (const auto& report : suite.reports) {
                if (report.passed) continue;
                std::printf("       failed: %s\n         lhs: %s\n         rhs: %s\n",
                            report.claim.c_str(), report.lhs.c_str(), report.rhs.c_str());
            }
        }
    }
    return all_passed ? 0 : 1;
}
