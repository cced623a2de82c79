#pragma once

// Central knobs shared by the library, the CLI and the test suites, so there
// is exactly one place where a tolerance can be loosened or tightened.

namespace korder {

struct Defaults {
    // Absolute tolerance requested from one Laplace-log integral evaluation.
    static constexpr double quad_tol = 1e-12;
    // Step-halving cap for the double-exponential rules; in practice they
    // converge after 5-7 halvings, the cap only bounds pathological requests.
    static constexpr int quad_max_halvings = 12;
    // Relative tolerance for the Bessel-K reference evaluation.
    static constexpr double bessel_rel_tol = 1e-12;
    // Finite-difference comparator: base step and number of halvings below it.
    // 0.05 with 4 halvings balances truncation against the ~1e-12 noise floor
    // of the function evaluations for derivative orders up to 4.
    static constexpr double fd_base_step = 0.05;
    static constexpr int fd_levels = 4;
    // Highest derivative order the closed-form assembly is wired up for.
    static constexpr int max_derivative_order = 6;
    // Default truncation of the j-sums in the series layer.
    static constexpr int default_j_max = 60;
    // Significant digits used for all machine-readable output.
    static constexpr int output_digits = 17;
};

} // namespace korder
