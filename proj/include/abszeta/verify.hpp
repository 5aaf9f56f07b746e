#ifndef ABSZETA_VERIFY_HPP
#define ABSZETA_VERIFY_HPP

#include <string>
#include <vector>

#include "abszeta/report.hpp"

namespace abszeta {

/// One named batch of checks; the acceptance gate runs all of them.
struct VerifySuite {
    std::string name;
    std::string description;
    std::vector<VerificationReport> reports;
    double elapsed_ms = 0.0;

    bool passed() const {
        for (const auto& report : reports)
            if (!report.passed) return false;
        return true;
    }
};

/// Registered suite names in gate order.
std::vector<std::string> verify_suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
VerifySuite run_verify_suite(const std::string& name);

/// Runs every suite in gate order.
std::vector<VerifySuite> run_all_verify_suites();

}  // namespace abszeta

#endif
