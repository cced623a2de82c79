#pragma once

#include <string>
#include <vector>

// Self-check suites: each check compares an identity's two sides and records
// the outcome.  The CLI `verify` command and the acceptance harness both run
// these.

namespace korder {

struct VerificationReport {
    std::string check_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;  // abs_diff / |rhs|, or abs_diff when rhs == 0
    double tol = 0.0;       // bound applied to rel_diff
    bool pass = false;
};

VerificationReport make_report(std::string check_id, double lhs, double rhs,
                               double tol);

std::vector<VerificationReport> verify_kernels();
std::vector<VerificationReport> verify_quadrature();
std::vector<VerificationReport> verify_first_order();
std::vector<VerificationReport> verify_higher_order();
std::vector<VerificationReport> verify_zeta();
std::vector<VerificationReport> verify_suite(const std::string& name);  // "all" included

} // namespace korder
