#include "korder/bessel_reference.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "korder/analytic_kernels.hpp"

namespace korder {

namespace {

// Summand of the cosh representation at abscissa t >= 0, computed with the
// exponents combined so that huge cosh(s t) against tiny e^{-x cosh t} never
// overflows or denormalizes prematurely:
//   e^{-x cosh t} cosh(s t) = e^{s t - x cosh t} (1 + e^{-2 s t}) / 2.
double cosh_rep_term(double s, double x, double t) {
    const double arg = s * t - x * std::cosh(t);
    if (arg < -745.0) return 0.0;
    if (t == 0.0) return std::exp(-x);
    return 0.5 * std::exp(arg) * (1.0 + std::exp(-2.0 * s * t));
}

// Trapezoid row over t = j*h, j >= 0 (half weight at j = 0 handled by caller);
// odd_only visits the refinement nodes only.
double k_row(double s, double x, double h, bool odd_only, long& evals) {
    double acc = 0.0;
    double peak = 0.0;
    int small_run = 0;
    for (int j = 1;; j += odd_only ? 2 : 1) {
        const double t = h * j;
        if (t > 40.0) break;  // e^{-x cosh t} is zero long before this
        const double term = cosh_rep_term(s, x, t);
        ++evals;
        acc += term;
        if (term > peak) peak = term;
        if (term <= 1e-19 * peak) {
            if (++small_run >= 3) break;
        } else {
            small_run = 0;
        }
    }
    return acc;
}

} // namespace

double bessel_k(double s, double x, double rel_tol) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: need x > 0");
    s = std::fabs(s);  // K is even in the order
    if (s > 30.0) throw std::domain_error("bessel_k: |order| > 30 unsupported");
    long evals = 0;
    double h = 0.5;
    double prev = h * (0.5 * cosh_rep_term(s, x, 0.0) + k_row(s, x, h, false, evals));
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        const double cur = 0.5 * prev + h * k_row(s, x, h, true, evals);
        if (std::fabs(cur - prev) <= rel_tol * 0.5 * std::fabs(cur)) return cur;
        prev = cur;
    }
    throw std::runtime_error("bessel_k: step-halving cap hit before tolerance");
}

double t_kernel(double s, double x) {
    if (!(s > -0.5))
        throw std::domain_error("t_kernel: defined for s > -1/2");
    return std::sqrt(M_PI) * std::pow(0.5 * x, s) * bessel_k(s, x) /
           gamma_real(s + 0.5);
}

namespace {

// One Richardson tableau: central stencils at halved steps, Neville
// extrapolation in h^2.  Keep whichever entry shows the smallest spread
// against its parents; once a new row only makes the spread grow, rounding
// noise has taken over and refinement stops.
FdResult richardson_tableau(const std::function<double(double)>& f, double at,
                            int n, double base_step, int levels) {
    std::vector<double> stencil_coeff(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        stencil_coeff[static_cast<size_t>(i)] =
            (i % 2 ? -1.0 : 1.0) * static_cast<double>(binomial_exact(n, i));
    auto stencil = [&](double h) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i)
            acc += stencil_coeff[static_cast<size_t>(i)] *
                   f(at + (0.5 * n - i) * h);
        return acc / std::pow(h, n);
    };
    std::vector<std::vector<double>> row_list;
    FdResult best{0.0, std::numeric_limits<double>::infinity()};
    double h = base_step;
    for (int i = 0; i <= levels; ++i, h *= 0.5) {
        std::vector<double> row(static_cast<size_t>(i) + 1);
        row[0] = stencil(h);
        double row_best = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= i; ++j) {
            const double pw = std::pow(4.0, j);
            row[static_cast<size_t>(j)] =
                (pw * row[static_cast<size_t>(j) - 1] -
                 row_list.back()[static_cast<size_t>(j) - 1]) /
                (pw - 1.0);
            const double spread = std::max(
                std::fabs(row[static_cast<size_t>(j)] - row[static_cast<size_t>(j) - 1]),
                std::fabs(row[static_cast<size_t>(j)] -
                          row_list.back()[static_cast<size_t>(j) - 1]));
            if (spread < best.err_estimate)
                best = {row[static_cast<size_t>(j)], spread};
            if (spread < row_best) row_best = spread;
        }
        row_list.push_back(std::move(row));
        if (i >= 2 && row_best > 4.0 * best.err_estimate) break;  // noise regime
    }
    return best;
}

} // namespace

FdResult richardson_derivative(const std::function<double(double)>& f,
                               double at, int n, double base_step, int levels) {
    if (n < 1) throw std::domain_error("richardson_derivative: need n >= 1");
    if (levels < 1 || base_step <= 0.0)
        throw std::domain_error("richardson_derivative: bad step plan");
    // Two tableaus at incommensurate base steps.  A genuine derivative
    // reproduces on both grids; a spread that was small by accident inside a
    // noise-dominated tableau does not, so the cross-grid gap goes into the
    // reported error and trips the significance check below.
    const FdResult t1 = richardson_tableau(f, at, n, base_step, levels);
    const FdResult t2 = richardson_tableau(
        f, at, n, base_step * 0.6180339887498949, levels);
    const FdResult& lead = t1.err_estimate <= t2.err_estimate ? t1 : t2;
    const double cross = std::fabs(t1.value - t2.value);
    const FdResult out{lead.value, std::max(lead.err_estimate, cross)};
    if (!(out.err_estimate <= 0.05 * std::max(std::fabs(out.value), 1e-12)))
        throw std::runtime_error(
            "richardson_derivative: loss of significance, extrapolation "
            "levels or grids disagree");
    return out;
}

FdResult fd_order_derivative(const OrderDerivativeRequest& req) {
    if (req.n < 1)
        throw std::domain_error("fd_order_derivative: need n >= 1");
    if (!(req.x > 0.0))
        throw std::domain_error("fd_order_derivative: need x > 0");
    const double x = req.x;
    std::function<double(double)> f;
    if (req.target == DerivTarget::t_kernel_at_half)
        f = [x](double s) { return t_kernel(s, x); };
    else
        f = [x](double s) { return bessel_k(s, x); };
    return richardson_derivative(f, 0.5, req.n, req.base_step, req.levels);
}

} // namespace korder
