#include "korder/order_derivatives.hpp"

#include <cmath>
#include <stdexcept>

#include "korder/analytic_kernels.hpp"
#include "korder/quadrature.hpp"

namespace korder {

namespace {

double k_half_closed(double x) {
    // K(1/2, x) = sqrt(pi/(2x)) e^{-x}
    return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
}

void check_order(int n) {
    if (n < 1 || n > Defaults::max_derivative_order)
        throw std::domain_error("derivative order out of the supported range");
}

void check_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("need x > 0");
}

// Accumulate coeff * U[a,b,eps](x) term by term so a non-converging member
// is reported with its own (a,b,eps) label.
double eval_map(const std::map<std::pair<int, int>, double>& m, int eps,
                double x, double tol) {
    double acc = 0.0;
    for (const auto& [ab, coeff] : m) {
        QuadratureSpec spec{ab.first, ab.second, eps, x};
        acc += coeff * u_integral(spec, tol).value;
    }
    return acc;
}

} // namespace

double t_half(double x) {
    check_x(x);
    return M_PI * 0.5 * std::exp(-x);
}

double t_deriv1(double x) {
    check_x(x);
    const double bracket = std::exp(2.0 * x) * exp_integral_e1(2.0 * x) +
                           std::log(x) + euler_gamma - std::log(2.0);
    return bracket * t_half(x);
}

double k_deriv1(double x) {
    check_x(x);
    return k_half_closed(x) * std::exp(2.0 * x) * exp_integral_e1(2.0 * x);
}

UTermMaps u_term_maps(int n) {
    check_order(n);
    UTermMaps maps;
    maps.constant = a1_term(n);

    // Group one: minus the odd-part polynomial of log(u+2) + log(u) against
    // 1/(u+2).  The polynomial is expanded binomially over the two logs.
    const PolynomialInW p = p_poly(n);
    for (int m = 0; m <= p.degree(); ++m) {
        const double q = p.coeffs[static_cast<size_t>(m)];
        if (q == 0.0) continue;
        for (int a = 0; a <= m; ++a)
            maps.over_u_plus_2[{a, m - a}] -=
                q * static_cast<double>(binomial_exact(m, a));
    }

    // Group two (carries the overall factor x): powers of log(u+2) from the
    // odd-part kernel, against log^{k+1}(u)/(k+1).
    for (int k = 0; k < n; ++k) {
        const double outer =
            static_cast<double>(binomial_exact(n, k)) / static_cast<double>(k + 1);
        double pi_pow = 1.0;
        double sign = 1.0;
        for (int j = 1; j <= n - k; j += 2) {
            maps.scaled_by_x[{n - k - j, k + 1}] +=
                outer * sign * static_cast<double>(binomial_exact(n - k, j)) * pi_pow;
            sign = -sign;
            pi_pow *= M_PI * M_PI;
        }
    }

    // Group three: the derivative-in-y kernel, one power of log(u+2) lower,
    // again against log^{k+1}(u)/(k+1) and 1/(u+2).
    for (int k = 0; k < n; ++k) {
        const double outer = static_cast<double>(binomial_exact(n, k)) *
                             static_cast<double>(n - k) /
                             static_cast<double>(k + 1);
        double pi_pow = 1.0;
        double sign = 1.0;
        for (int j = 1; j <= n - 1 - k; j += 2) {
            maps.over_u_plus_2[{n - 1 - k - j, k + 1}] -=
                outer * sign * static_cast<double>(binomial_exact(n - 1 - k, j)) *
                pi_pow;
            sign = -sign;
            pi_pow *= M_PI * M_PI;
        }
    }
    return maps;
}

double t_deriv_n(int n, double x, double tol) {
    check_order(n);
    check_x(x);
    const UTermMaps maps = u_term_maps(n);
    double bracket = maps.constant;
    bracket += x * eval_map(maps.scaled_by_x, 0, x, tol);
    bracket += eval_map(maps.over_u_plus_2, 1, x, tol);
    const double sign = n % 2 ? -1.0 : 1.0;
    return sign * t_half(x) * bracket;
}

double t_deriv2_explicit(double x, double tol) {
    check_x(x);
    const double log2 = std::log(2.0);
    auto u = [&](int a, int b, int eps) {
        return u_integral(QuadratureSpec{a, b, eps, x}, tol).value;
    };
    const double bracket = log2 * log2 - 2.0 * zeta_real(2.0)  //
                           - 2.0 * u(1, 0, 1)                  //
                           - 4.0 * u(0, 1, 1)                  //
                           + 2.0 * x * u(1, 1, 0)              //
                           + x * u(0, 2, 0);
    return t_half(x) * bracket;
}

TaylorJet k_jet(int n_max, double x, double tol) {
    if (n_max < 0 || n_max > Defaults::max_derivative_order)
        throw std::domain_error("k_jet: order out of the supported range");
    check_x(x);
    // K(s,x) = (1/sqrt(pi)) * (2/x)^s * Gamma(s + 1/2) * T(s, x); all three
    // factor jets at s = 1/2 are known, the product is Leibniz.
    TaylorJet power_jet(n_max);
    const double log_2_over_x = std::log(2.0 / x);
    const double root = std::sqrt(2.0 / x);
    double lp = 1.0;
    for (int i = 0; i <= n_max; ++i) {
        power_jet[i] = lp * root;
        lp *= log_2_over_x;
    }
    const GammaJet gj = gamma_derivs_at_one(n_max);
    TaylorJet gamma_jet(n_max);
    for (int i = 0; i <= n_max; ++i) gamma_jet[i] = gj[i];
    TaylorJet t_jet(n_max);
    t_jet[0] = t_half(x);
    for (int i = 1; i <= n_max; ++i) t_jet[i] = t_deriv_n(i, x, tol);
    TaylorJet out = leibniz_product(leibniz_product(power_jet, gamma_jet), t_jet);
    const double scale = 1.0 / std::sqrt(M_PI);
    for (int i = 0; i <= n_max; ++i) out[i] *= scale;
    return out;
}

} // namespace korder
