#pragma once

#include <functional>

#include "korder/config.hpp"

// Independent reference evaluations ("the other route"): Bessel K from its
// cosh-integral representation, the T kernel obtained from it, and Richardson
// finite differencing in the order parameter.  Nothing here shares code with
// the closed-form assemblies, so agreement between the two routes is a real
// check rather than an identity.

namespace korder {

// Modified Bessel function of the second kind, real order, via
//   K_s(x) = Int_0^inf e^{-x cosh t} cosh(s t) dt
// evaluated with the trapezoid rule on the doubly-exponentially decaying
// integrand, step-halved to the requested relative tolerance.
// Preconditions: x > 0, |s| <= 30.
double bessel_k(double s, double x, double rel_tol = Defaults::bessel_rel_tol);

// T(s, x) = sqrt(pi) (x/2)^s K_s(x) / Gamma(s + 1/2); defined for s > -1/2.
// At s = 1/2 this equals (pi/2) e^{-x}.
double t_kernel(double s, double x);

enum class DerivTarget {
    t_kernel_at_half,
    bessel_k_at_half,
};

struct OrderDerivativeRequest {
    int n = 1;  // derivative order in s, taken at s = 1/2
    DerivTarget target = DerivTarget::t_kernel_at_half;
    double x = 1.0;
    double base_step = Defaults::fd_base_step;
    int levels = Defaults::fd_levels;
};

struct FdResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

// Central-difference n-th derivative of f at `at`, Richardson-extrapolated
// over `levels` step halvings below base_step.  The tableau entry with the
// smallest indicated error wins; refinement stops early once rounding noise
// makes successive entries diverge.  The whole tableau is repeated on a
// second, incommensurate grid and the cross-grid gap folds into the reported
// error estimate.  Throws std::runtime_error when the result fails its own
// significance check.
FdResult richardson_derivative(const std::function<double(double)>& f,
                               double at, int n, double base_step, int levels);

// The comparator used throughout the tests: d^n/ds^n of T or K at s = 1/2.
FdResult fd_order_derivative(const OrderDerivativeRequest& req);

} // namespace korder
