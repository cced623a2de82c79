#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "korder/analytic_kernels.hpp"
#include "korder/quadrature.hpp"
#include "oracles.hpp"

using namespace korder;
namespace oracle = korder_test;

TEST_CASE("exp_integral_e1 frozen values from the Laplace-representation oracle") {
    // Oracle-computed with the independent Simpson route (and matching the
    // usual published decimals).
    CHECK(exp_integral_e1(1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-13));
    CHECK(exp_integral_e1(2.0) == doctest::Approx(0.04890051070806112).epsilon(1e-13));
    for (double z : {0.5, 0.9, 1.0, 1.1, 2.0, 5.0, 10.0, 25.0}) {
        CHECK(exp_integral_e1(z) ==
              doctest::Approx(oracle::e1_laplace(z)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
    CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
}

TEST_CASE("exp_integral_e1 is continuous across the series/fraction switch") {
    const double below = exp_integral_e1(1.0 - 1e-9);
    const double above = exp_integral_e1(1.0 + 1e-9);
    CHECK(std::fabs(below - above) < 1e-9);  // |E1'| < 1 there
}

TEST_CASE("u_integral closed forms: the scaled E1 member") {
    // U[0,0,1](x) = e^{2x} E1(2x)
    for (double x : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double val = u_integral({0, 0, 1, x}).value;
        const double ref = std::exp(2.0 * x) * exp_integral_e1(2.0 * x);
        CHECK(val == doctest::Approx(ref).epsilon(1e-11));
    }
    CHECK(u_integral({0, 0, 1, 0.5}).value ==
          doctest::Approx(0.59634736232319407).epsilon(1e-11));  // e * E1(1)
}

TEST_CASE("u_integral closed forms: pure log powers scale to gamma derivatives") {
    const GammaJet g = gamma_derivs_at_one(2);
    for (double x : {0.25, 1.0, 3.0, 10.0}) {
        const double lx = std::log(x);
        // x * U[0,1,0](x) = Gamma'(1) - log x
        CHECK(x * u_integral({0, 1, 0, x}).value ==
              doctest::Approx(g[1] - lx).epsilon(1e-10));
        // x * U[0,2,0](x) = Gamma''(1) - 2 log x Gamma'(1) + log^2 x
        CHECK(x * u_integral({0, 2, 0, x}).value ==
              doctest::Approx(g[2] - 2.0 * lx * g[1] + lx * lx).epsilon(1e-10));
    }
}

TEST_CASE("u_integral against the independent Simpson oracle") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int eps = 0; eps <= 1; ++eps)
                for (double x : {0.5, 2.0}) {
                    const double de = u_integral({a, b, eps, x}).value;
                    const double simpson = oracle::u_simpson(a, b, eps, x);
                    CHECK(de == doctest::Approx(simpson).epsilon(5e-10));
                }
}

TEST_CASE("u_integral error estimates are honest") {
    // A tighter re-evaluation stands in for truth; the reported estimate must
    // cover the actual gap with its stated margin.
    for (double x : {0.5, 1.0, 5.0}) {
        for (int b = 0; b <= 2; ++b) {
            const QuadratureResult coarse = u_integral({1, b, 1, x}, 1e-8);
            const QuadratureResult fine = u_integral({1, b, 1, x}, 1e-14);
            const double true_err = std::fabs(coarse.value - fine.value);
            CHECK(true_err <= 3.0 * coarse.abs_error_estimate + 1e-15);
        }
    }
}

TEST_CASE("u_integral bookkeeping: counts, convergence flagging, preconditions") {
    const QuadratureResult r = u_integral({1, 1, 1, 1.0});
    CHECK(r.evaluations > 100);
    CHECK(r.abs_error_estimate < 1e-12);
    CHECK(std::isfinite(r.value));
    CHECK_THROWS_AS(u_integral({0, 0, 0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(u_integral({0, 0, 0, -2.0}), std::domain_error);
    CHECK_THROWS_AS(u_integral({-1, 0, 0, 1.0}), std::domain_error);
}

TEST_CASE("u_integral reports non-convergence with the best estimate attached") {
    bool threw = false;
    try {
        u_integral({2, 2, 1, 1.0}, 1e-30);  // unreachable tolerance
    } catch (const QuadratureError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("U[2,2,1]") != std::string::npos);
        CHECK(std::isfinite(e.best().value));
        // the best estimate is still a decent value for the integral
        const double ref = u_integral({2, 2, 1, 1.0}).value;
        CHECK(e.best().value == doctest::Approx(ref).epsilon(1e-9));
    }
    CHECK(threw);
}

TEST_CASE("quadrature spec label spells out the member") {
    CHECK(QuadratureSpec{1, 2, 1, 0.5}.label().rfind("U[1,2,1](x=0.5", 0) == 0);
}

TEST_CASE("damped_log_poly_integral matches the member-by-member sum") {
    const std::map<std::pair<int, int>, double> combo{
        {{0, 0}, 1.5}, {{1, 0}, -2.0}, {{0, 2}, 0.75}, {{2, 1}, 0.1}};
    for (double x : {0.5, 2.0}) {
        double separate = 0.0;
        for (const auto& [ab, c] : combo)
            separate += c * u_integral({ab.first, ab.second, 1, x}).value;
        const QuadratureResult one_pass = damped_log_poly_integral(combo, 1, x);
        CHECK(one_pass.value == doctest::Approx(separate).epsilon(1e-10));
    }
    CHECK(damped_log_poly_integral({}, 1, 1.0).value == 0.0);
}
