#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "korder/config.hpp"
#include "korder/taylor_jet.hpp"

// The series side of the artifact: multiplicative coefficients c[s,j] built
// from divisor sums, the weighted Bessel series h(s), its closed form in
// terms of completed zeta values, and the Taylor coefficients alpha_n of h
// at s = 1/2 assembled from coefficient jets and K jets.

namespace korder {

struct FactoredInteger {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, int>> prime_powers;  // ascending primes

    static FactoredInteger factor(std::uint64_t n);  // trial division; n >= 1
};

// Sum of divisors of p^e, exact: 1 + p + ... + p^e.
std::uint64_t sigma1_prime_power(std::uint64_t p, int e);

// Multiplicative weights:
//   a(2^m) = 2^m,  a(p^e) = sigma1(p^e) for odd p,  a(1) = 1;
//   b(j)   = sigma1(j) for odd j, 0 for even j, b(1) = 1.
std::uint64_t a_fn(std::uint64_t j);
std::uint64_t b_fn(std::uint64_t j);

// c[s,j] = sum_{d | j} a(d) b(j/d) (j/d^2)^{s/2}.  Multiplicative in j;
// c[s,1] = 1, c[s,2^e] = 2^{e(1-s/2)}, c[s,p] = (p+1)(p^{s/2} + p^{-s/2}).
double c_coeff(double s, std::uint64_t j);

// Derivative jet of s -> c[s,j] at s = 1/2: product over prime powers of the
// closed-form prime-power jets.
TaylorJet c_jet(std::uint64_t j, int n_max);

// Completed zeta: pi^{-s/2} Gamma(s/2) zeta(s); s > 0, s != 1.
double zeta_star(double s);

// Truncated Bessel series  sum_{j=1}^{j_max} c[s,j] K_s(2 pi sqrt(j)),
// summed over a fixed pairwise tree for run-to-run determinism.
double h_partial(double s, int j_max = Defaults::default_j_max);

// Closed form of the full series:
//   s(s+1)/(32 pi^2 sqrt 2) * (2^{s/2}-2^{-s/2}) (2^{(s-1)/2}-2^{-(s-1)/2})
//   * zeta_star(s) * zeta_star(s+1);  s > 0, s != 1.
double h_closed(double s);

// Single-j contribution to the n-th Taylor coefficient of h at s = 1/2:
// Leibniz entry n of (c-jet of j) x (K-jet at 2 pi sqrt(j)).
double alpha_term(int n, std::uint64_t j);

// alpha_n = sum_{j=1}^{j_max} alpha_term(n, j), fixed-tree reduction.
// alpha_0 reproduces h(1/2); alpha_n matches d^n h/ds^n at 1/2.
double alpha_coeff(int n, int j_max = Defaults::default_j_max);

} // namespace korder
