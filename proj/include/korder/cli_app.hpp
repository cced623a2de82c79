#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "korder/config.hpp"

// Command implementations behind the `korder` executable.  Kept apart from
// argument parsing so the tests can drive them directly and byte-compare the
// output streams.

namespace korder {

enum class OutputFormat { json, csv };

struct RunConfig {
    int n = 1;                    // derivative order (eval) / n_max (table, alpha)
    double x = 1.0;               // evaluation point (eval)
    std::vector<double> x_grid;   // grid for table mode
    int j_max = Defaults::default_j_max;
    double tol = Defaults::quad_tol;
    OutputFormat format = OutputFormat::json;
    std::string suite = "all";    // verify mode
    int digits = Defaults::output_digits;
};

// Exit codes shared by all commands:
//   0  success (verify: every check passed)
//   1  verification found a failing check
//   2  infrastructure failure (bad arguments, quadrature non-convergence, ...)
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_infrastructure = 2;

// eval: derivative order n at one x; emits one record with both the T and K
// derivative, the finite-difference comparator and their relative gap.
int run_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// table: orders 0..n over an x grid; one record per (x, order).
int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// verify: run a named check suite, print one record per check.
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// alpha: Taylor coefficients of the Bessel series at s = 1/2 for orders
// 0..n, with tail estimates and the finite-difference comparator.
int run_alpha(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Grid helper for --x-grid start,stop,count (inclusive endpoints).
std::vector<double> parse_grid(const std::string& text);

} // namespace korder
