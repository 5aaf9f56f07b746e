#ifndef ABSZETA_REPORT_HPP
#define ABSZETA_REPORT_HPP

#include <algorithm>
#include <map>
#include <string>

#include "abszeta/types.hpp"

namespace abszeta {

/// Structured outcome of one symbolic or numeric check.
struct VerificationReport {
    std::string claim;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::map<std::string, std::string> params;

    static VerificationReport symbolic(std::string claim, bool equal, std::string lhs,
                                       std::string rhs) {
        VerificationReport report;
        report.claim = std::move(claim);
        report.passed = equal;
        report.lhs = std::move(lhs);
        report.rhs = std::move(rhs);
        return report;
    }

    static VerificationReport numeric(std::string claim, Complex lhs, Complex rhs, double tol) {
        VerificationReport report;
        report.claim = std::move(claim);
        report.abs_err = std::abs(lhs - rhs);
        report.rel_err = report.abs_err / std::max(std::abs(rhs), 1e-300);
        report.passed = report.rel_err <= tol;
        report.lhs = format_complex(lhs);
        report.rhs = format_complex(rhs);
        report.params["tol"] = format_double(tol);
        return report;
    }

    static std::string format_double(double value);
    static std::string format_complex(Complex value);
};

}  // namespace abszeta

#endif
