#pragma once

#include <map>
#include <utility>

#include "korder/config.hpp"
#include "korder/taylor_jet.hpp"

// Closed-form order-derivative assemblies at s = 1/2.  Every derivative of
// the T kernel reduces to a constant plus a finite linear combination of the
// damped log-power integrals U[a,b,eps](x); derivatives of K then follow by
// a Leibniz product with the elementary prefactor jets.

namespace korder {

// T(1/2, x) = (pi/2) e^{-x}.
double t_half(double x);

// First derivative in closed form:
//   (e^{2x} E1(2x) + log x + euler_gamma - log 2) * t_half(x).
double t_deriv1(double x);

// First derivative of K at s = 1/2:  K(1/2,x) * e^{2x} E1(2x).
double k_deriv1(double x);

// The reduction of the n-th derivative bracket to quadrature terms:
//   d^n T/ds^n = (-1)^n t_half(x) * [ constant
//                                     + x * sum scaled_by_x[(a,b)] U[a,b,0](x)
//                                     +     sum over_u_plus_2[(a,b)] U[a,b,1](x) ].
// The maps depend on n only; x enters at evaluation time.
struct UTermMaps {
    double constant = 0.0;
    std::map<std::pair<int, int>, double> scaled_by_x;    // eps = 0 group
    std::map<std::pair<int, int>, double> over_u_plus_2;  // eps = 1 group
};

UTermMaps u_term_maps(int n);

// n-th order-derivative of T at s = 1/2, 1 <= n <= Defaults::max_derivative_order.
// Quadrature failures propagate as QuadratureError naming the (a,b,eps) term.
double t_deriv_n(int n, double x, double tol = Defaults::quad_tol);

// The second derivative spelled out term by term,
//   t_half(x) * ( log^2 2 - 2 zeta(2) - 2 U[1,0,1] - 4 U[0,1,1]
//                 + 2x U[1,1,0] + x U[0,2,0] ),
// kept as an independently coded comparator for the generic assembly.
double t_deriv2_explicit(double x, double tol = Defaults::quad_tol);

// Derivative jet of K at s = 1/2:  K = (1/sqrt(pi)) * (2/x)^s * Gamma(s+1/2)
// * T(s,x), assembled by Leibniz products of the three factor jets.
TaylorJet k_jet(int n_max, double x, double tol = Defaults::quad_tol);

} // namespace korder
