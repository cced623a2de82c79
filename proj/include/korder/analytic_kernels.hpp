#pragma once

#include <cstdint>
#include <vector>

// Closed-form scalar kernels used by the derivative assemblies: the odd-part
// polynomials coming from powers of (w + i*pi), the circle average of
// (log 2 + i*phi)^n, the derivative jet of Gamma at 1, and real-axis zeta.

namespace korder {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Exact binomial coefficient.  Safe for n <= 62 in 64-bit arithmetic; the
// intermediate products stay exact because each partial product is itself a
// binomial coefficient.
std::uint64_t binomial_exact(int n, int k);

// Dense polynomial in one real variable, coeffs[i] multiplying w^i.
struct PolynomialInW {
    std::vector<double> coeffs;

    double eval(double w) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Im[(t + i*pi)^m] / pi, expanded over the odd binomial terms.  This is the
// common core of p_poly and f_real below.
double im_pow_over_pi(int m, double t);

// Degree n-1 polynomial with p_poly(n)(w) = Im[(w + i*pi)^n] / pi.
// Equivalently the geometric sum of (w - i*pi)^(n-1-k) (w + i*pi)^k over
// k = 0..n-1; only every other coefficient is nonzero.
PolynomialInW p_poly(int n);

// f_real(n, k, L) = Im[(L + i*pi)^(n-k)] / pi.  Zero when k = n.
double f_real(int n, int k, double log_arg);

// Derivative in y of y -> f_real(n, k, log(y+1)):
//   (n-k) * f_real(n-1, k, log(y+1)) / (y+1).
double f_real_dy(int n, int k, double y);

// Re[ (1/2pi) Int_{-pi}^{pi} (log 2 + i*phi)^n dphi ]: the constant term of
// the n-th derivative assembly.  a1_term(0) = 1, a1_term(1) = log 2,
// a1_term(2) = log^2 2 - pi^2/3.
double a1_term(int n);

// values[n] = Gamma^(n)(1).  Built from the Maclaurin series of log Gamma(1+z)
// (Euler's constant and zeta values) followed by series exponentiation.
struct GammaJet {
    std::vector<double> values;

    double operator[](int n) const { return values[static_cast<size_t>(n)]; }
    int order() const { return static_cast<int>(values.size()) - 1; }
};

GammaJet gamma_derivs_at_one(int n_max);

// Riemann zeta on the real axis via the accelerated alternating (eta) series.
// Requires s > 0 and s != 1; relative accuracy well inside 1e-12 on [0.1, 50].
double zeta_real(double s);

// Gamma for a general real argument (delegates to the C library's tgamma,
// which is accurate to a few ulp); poles raise std::domain_error.
double gamma_real(double t);

} // namespace korder
