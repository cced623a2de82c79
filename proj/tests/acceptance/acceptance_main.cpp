// Acceptance harness: ten fixed criteria covering the closed-form derivative
// assemblies, their quadrature and finite-difference comparators, and the
// series identities.  One line per criterion; the exit status is the number
// of failed criteria.  Runs in well under a minute at stock tolerances.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "korder/analytic_kernels.hpp"
#include "korder/bessel_reference.hpp"
#include "korder/order_derivatives.hpp"
#include "korder/quadrature.hpp"
#include "korder/zeta_link.hpp"
#include "oracles.hpp"

using namespace korder;

namespace {

int failures = 0;

const double kGrid[] = {0.25, 0.5, 1.0, 2.0, 5.0, 10.0};
const double kFdGrid[] = {0.5, 1.0, 2.0, 5.0};

std::string fmt(const char* f, ...) {
    char buf[160];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void line(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %02d %s (%s)\n", ok ? "PASS" : "FAIL", id, name,
                detail.c_str());
    if (!ok) ++failures;
}

double rel(double lhs, double rhs) {
    return rhs != 0.0 ? std::fabs(lhs - rhs) / std::fabs(rhs)
                      : std::fabs(lhs - rhs);
}

FdResult fd_t(int n, double x) {
    return fd_order_derivative({n, DerivTarget::t_kernel_at_half, x,
                                Defaults::fd_base_step, Defaults::fd_levels});
}

void criterion_01() {
    // First derivative of the T kernel: against finite differences, and
    // against the bracket assembled with a test-side E1 evaluation.
    double worst_fd = 0.0, worst_closed = 0.0;
    for (double x : kGrid) {
        const double d1 = t_deriv1(x);
        worst_fd = std::max(worst_fd, rel(d1, fd_t(1, x).value));
        const double bracket = std::exp(2.0 * x) * korder_test::e1_laplace(2.0 * x) +
                               std::log(x) + euler_gamma - std::log(2.0);
        const double assembled = bracket * 0.5 * M_PI * std::exp(-x);
        worst_closed = std::max(worst_closed, rel(d1, assembled));
    }
    line(1, "first t-derivative vs finite differences and vs independent assembly",
         worst_fd <= 1e-7 && worst_closed <= 1e-11,
         fmt("max rel fd %.2e <= 1e-07, assembly %.2e <= 1e-11", worst_fd,
             worst_closed));
}

void criterion_02() {
    // The generic reduction must collapse onto the dedicated order-1 and
    // order-2 forms.
    double worst1 = 0.0, worst2 = 0.0;
    for (double x : kGrid) {
        worst1 = std::max(worst1, rel(t_deriv_n(1, x), t_deriv1(x)));
        worst2 = std::max(worst2, rel(t_deriv_n(2, x), t_deriv2_explicit(x)));
    }
    line(2, "generic reduction collapses to the order-1 and order-2 forms",
         worst1 <= 1e-11 && worst2 <= 1e-9,
         fmt("max rel n=1 %.2e <= 1e-11, n=2 %.2e <= 1e-09", worst1, worst2));
}

void criterion_03() {
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n)
        for (double x : kFdGrid)
            worst = std::max(worst, rel(t_deriv_n(n, x), fd_t(n, x).value));
    line(3, "t-derivatives of order 2..4 vs finite differences", worst <= 1e-5,
         fmt("max rel %.2e <= 1e-05", worst));
}

void criterion_04() {
    double worst = 0.0;
    for (double x : kGrid) {
        const FdResult fd = fd_order_derivative(
            {1, DerivTarget::bessel_k_at_half, x, Defaults::fd_base_step,
             Defaults::fd_levels});
        worst = std::max(worst, rel(k_deriv1(x), fd.value));
    }
    line(4, "first k-derivative vs finite differences", worst <= 1e-7,
         fmt("max rel %.2e <= 1e-07", worst));
}

void criterion_05() {
    // Closed forms of two members of the damped log-power integral family.
    const GammaJet g = gamma_derivs_at_one(2);
    double worst_e1 = 0.0, worst_log2 = 0.0;
    for (double x : kGrid) {
        const double u001 = u_integral({0, 0, 1, x}).value;
        worst_e1 = std::max(
            worst_e1, rel(u001, std::exp(2.0 * x) * exp_integral_e1(2.0 * x)));
        const double u020 = u_integral({0, 2, 0, x}).value;
        const double lx = std::log(x);
        worst_log2 =
            std::max(worst_log2, rel(x * u020, g[2] - 2.0 * lx * g[1] + lx * lx));
    }
    line(5, "damped log integrals match their closed forms",
         worst_e1 <= 1e-10 && worst_log2 <= 1e-10,
         fmt("max rel e1 %.2e, log-square %.2e, both <= 1e-10", worst_e1,
             worst_log2));
}

void criterion_06() {
    const GammaJet g = gamma_derivs_at_one(2);
    const double resid =
        std::fabs(2.0 * g[2] - 2.0 * g[1] * g[1] - 2.0 * zeta_real(2.0));
    line(6, "gamma-derivative combination cancels", resid <= 1e-12,
         fmt("|residual| %.2e <= 1e-12", resid));
}

void criterion_07() {
    int mismatches = 0, identities = 0;
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) {
            ++identities;
            if (static_cast<std::uint64_t>(k) * binomial_exact(n, k) !=
                static_cast<std::uint64_t>(n + 1 - k) * binomial_exact(n, k - 1))
                ++mismatches;
        }
    line(7, "weighted binomial recurrence exact through n=30", mismatches == 0,
         fmt("%d identities, %d mismatches", identities, mismatches));
}

void criterion_08() {
    double worst = 0.0;
    for (double s : {1.5, 2.0, 2.5, 3.0, 4.0})
        worst = std::max(worst, rel(h_partial(s, 60), h_closed(s)));
    line(8, "weighted bessel series equals its closed form", worst <= 1e-9,
         fmt("max rel %.2e <= 1e-09", worst));
}

void criterion_09() {
    double worst = 0.0;
    for (int n = 0; n <= 2; ++n) {
        const double al = alpha_coeff(n, 60);
        const double cmp =
            n == 0 ? h_closed(0.5)
                   : richardson_derivative([](double s) { return h_closed(s); },
                                           0.5, n, Defaults::fd_base_step,
                                           Defaults::fd_levels)
                         .value;
        worst = std::max(worst, rel(al, cmp));
    }
    line(9, "series taylor coefficients vs finite differences of the closed form",
         worst <= 1e-5, fmt("max rel %.2e <= 1e-05", worst));
}

void criterion_10() {
    std::mt19937 rng(20260822u);
    std::uniform_int_distribution<std::uint64_t> pick(1, 500);
    double worst = 0.0;
    int done = 0;
    while (done < 200) {
        const std::uint64_t j1 = pick(rng), j2 = pick(rng);
        if (std::gcd(j1, j2) != 1) continue;
        ++done;
        for (double s : {0.5, 2.0})
            worst = std::max(worst, rel(c_coeff(s, j1) * c_coeff(s, j2),
                                        c_coeff(s, j1 * j2)));
    }
    line(10, "series coefficients multiplicative on 200 coprime pairs",
         worst <= 1e-12, fmt("max rel %.2e <= 1e-12", worst));
}

} // namespace

int main() {
    criterion_01();
    criterion_02();
    criterion_03();
    criterion_04();
    criterion_05();
    criterion_06();
    criterion_07();
    criterion_08();
    criterion_09();
    criterion_10();
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
