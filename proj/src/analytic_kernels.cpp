#include "korder/analytic_kernels.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace korder {

std::uint64_t binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i because r*(n-k+i)/i = C(n-k+i, i).
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

double PolynomialInW::eval(double w) const {
    double acc = 0.0;  // Horner, highest degree first
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * w + coeffs[i];
    return acc;
}

double im_pow_over_pi(int m, double t) {
    // Im[(t + i pi)^m]/pi = sum over odd j of C(m,j) (-1)^((j-1)/2) pi^(j-1) t^(m-j)
    double acc = 0.0;
    double pi_pow = 1.0;  // pi^(j-1), starting at j = 1
    double sign = 1.0;
    for (int j = 1; j <= m; j += 2) {
        acc += sign * static_cast<double>(binomial_exact(m, j)) * pi_pow *
               std::pow(t, m - j);
        sign = -sign;
        pi_pow *= M_PI * M_PI;
    }
    return acc;
}

PolynomialInW p_poly(int n) {
    if (n < 1) throw std::domain_error("p_poly: n must be >= 1");
    PolynomialInW p;
    p.coeffs.assign(static_cast<size_t>(n), 0.0);  // degree n-1
    double pi_pow = 1.0;
    double sign = 1.0;
    for (int j = 1; j <= n; j += 2) {
        p.coeffs[static_cast<size_t>(n - j)] =
            sign * static_cast<double>(binomial_exact(n, j)) * pi_pow;
        sign = -sign;
        pi_pow *= M_PI * M_PI;
    }
    return p;
}

double f_real(int n, int k, double log_arg) {
    if (k < 0 || k > n) throw std::domain_error("f_real: need 0 <= k <= n");
    return im_pow_over_pi(n - k, log_arg);
}

double f_real_dy(int n, int k, double y) {
    if (k < 0 || k > n) throw std::domain_error("f_real_dy: need 0 <= k <= n");
    if (y <= -1.0) throw std::domain_error("f_real_dy: need y > -1");
    if (k == n) return 0.0;  // the (n-k) factor vanishes one step earlier too
    return static_cast<double>(n - k) * f_real(n - 1, k, std::log1p(y)) / (y + 1.0);
}

double a1_term(int n) {
    if (n < 0) throw std::domain_error("a1_term: n must be >= 0");
    // Odd powers of phi average to zero over the symmetric interval; even
    // powers leave pi^j/(j+1) with alternating sign from i^j.
    const double log2 = std::log(2.0);
    double acc = 0.0;
    double pi_pow = 1.0;  // pi^j
    double sign = 1.0;    // (-1)^(j/2)
    for (int j = 0; j <= n; j += 2) {
        acc += sign * static_cast<double>(binomial_exact(n, j)) *
               std::pow(log2, n - j) * pi_pow / static_cast<double>(j + 1);
        sign = -sign;
        pi_pow *= M_PI * M_PI;
    }
    return acc;
}

GammaJet gamma_derivs_at_one(int n_max) {
    if (n_max < 0) throw std::domain_error("gamma_derivs_at_one: n_max >= 0");
    // log Gamma(1+z) = -euler_gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k.
    const size_t m = static_cast<size_t>(n_max);
    std::vector<double> logf(m + 1, 0.0);
    if (m >= 1) logf[1] = -euler_gamma;
    double sgn = 1.0;  // (-1)^k at k = 2
    for (size_t k = 2; k <= m; ++k) {
        logf[k] = sgn * zeta_real(static_cast<double>(k)) / static_cast<double>(k);
        sgn = -sgn;
    }
    // Exponentiate the Maclaurin series: g = exp(f), f(0) = 0, via
    // (m+1) g_{m+1} = sum_i (i+1) f_{i+1} g_{m-i}  (series coefficients).
    std::vector<double> g(m + 1, 0.0);
    g[0] = 1.0;
    for (size_t j = 1; j <= m; ++j) {
        double acc = 0.0;
        for (size_t i = 1; i <= j; ++i)
            acc += static_cast<double>(i) * logf[i] * g[j - i];
        g[j] = acc / static_cast<double>(j);
    }
    // Convert series coefficients to plain derivatives.
    GammaJet jet;
    jet.values.resize(m + 1);
    double fact = 1.0;
    for (size_t j = 0; j <= m; ++j) {
        if (j > 0) fact *= static_cast<double>(j);
        jet.values[j] = fact * g[j];
    }
    return jet;
}

double zeta_real(double s) {
    if (s <= 0.0) throw std::domain_error("zeta_real: need s > 0");
    if (s == 1.0) throw std::domain_error("zeta_real: pole at s = 1");
    // Chebyshev-accelerated alternating series (P. Borwein's weights): with
    // n terms the error falls like (3 + sqrt 8)^-n, so n = 50 is far below
    // double rounding for every s in the supported range.
    constexpr int n = 50;
    static const std::array<double, n + 1> d = [] {
        std::array<double, n + 1> out{};
        double term = 1.0;  // n * (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
        double acc = 1.0;
        out[0] = 1.0;
        for (int i = 0; i < n; ++i) {
            term *= 4.0 * static_cast<double>((n + i)) * static_cast<double>(n - i) /
                    (static_cast<double>(2 * i + 1) * static_cast<double>(2 * i + 2));
            acc += term;
            out[static_cast<size_t>(i) + 1] = acc;
        }
        return out;
    }();
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += sign * (d[static_cast<size_t>(k)] - d[n]) /
               std::pow(static_cast<double>(k + 1), s);
        sign = -sign;
    }
    return -sum / (d[n] * (1.0 - std::pow(2.0, 1.0 - s)));
}

double gamma_real(double t) {
    if (t <= 0.0 && t == std::floor(t))
        throw std::domain_error("gamma_real: pole at non-positive integers");
    return std::tgamma(t);
}

} // namespace korder
