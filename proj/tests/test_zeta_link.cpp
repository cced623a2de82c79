#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "korder/analytic_kernels.hpp"
#include "korder/bessel_reference.hpp"
#include "korder/order_derivatives.hpp"
#include "korder/zeta_link.hpp"
#include "oracles.hpp"

using namespace korder;

TEST_CASE("trial-division factorization") {
    const FactoredInteger f = FactoredInteger::factor(360);
    REQUIRE(f.prime_powers.size() == 3);
    CHECK(f.prime_powers[0] == std::pair<std::uint64_t, int>{2, 3});
    CHECK(f.prime_powers[1] == std::pair<std::uint64_t, int>{3, 2});
    CHECK(f.prime_powers[2] == std::pair<std::uint64_t, int>{5, 1});
    CHECK(FactoredInteger::factor(1).prime_powers.empty());
    CHECK(FactoredInteger::factor(97).prime_powers ==
          std::vector<std::pair<std::uint64_t, int>>{{97, 1}});
    CHECK_THROWS_AS(FactoredInteger::factor(0), std::domain_error);
}

TEST_CASE("multiplicative weight functions") {
    CHECK(sigma1_prime_power(3, 2) == 13);
    CHECK(sigma1_prime_power(2, 3) == 15);
    CHECK(a_fn(1) == 1);
    for (int m = 1; m <= 6; ++m)
        CHECK(a_fn(std::uint64_t{1} << m) == (std::uint64_t{1} << m));
    CHECK(a_fn(45) == 78);   // sigma1(9) * sigma1(5) = 13 * 6
    CHECK(a_fn(7) == 8);
    CHECK(a_fn(12) == 4 * 4);  // 2^2 part contributes 4, sigma1(3) = 4
    CHECK(b_fn(1) == 1);
    CHECK(b_fn(2) == 0);
    CHECK(b_fn(12) == 0);
    CHECK(b_fn(45) == 78);
    CHECK(b_fn(7) == 8);
}

TEST_CASE("series coefficients at small indices") {
    for (double s : {0.5, 2.0, 3.7}) CHECK(c_coeff(s, 1) == doctest::Approx(1.0));
    // c[2,3]: divisors 1 and 3 give (3+1)*3 + (3+1)*(1/3) = 40/3
    CHECK(c_coeff(2.0, 3) == doctest::Approx(40.0 / 3.0).epsilon(1e-14));
    for (double s : {0.5, 2.0, 3.0})
        for (int e = 1; e <= 6; ++e)
            CHECK(c_coeff(s, std::uint64_t{1} << e) ==
                  doctest::Approx(std::pow(2.0, e * (1.0 - 0.5 * s))).epsilon(1e-14));
    // odd prime: (p+1)(p^{s/2} + p^{-s/2})
    for (double s : {0.5, 2.0})
        CHECK(c_coeff(s, 5) ==
              doctest::Approx(6.0 * (std::pow(5.0, 0.5 * s) + std::pow(5.0, -0.5 * s)))
                  .epsilon(1e-14));
    CHECK_THROWS_AS(c_coeff(2.0, 0), std::domain_error);
}

TEST_CASE("series coefficients are multiplicative on coprime pairs") {
    std::mt19937 rng(917u);
    std::uniform_int_distribution<std::uint64_t> pick(2, 400);
    int tested = 0;
    while (tested < 100) {
        const std::uint64_t m = pick(rng), n = pick(rng);
        if (std::gcd(m, n) != 1) continue;
        ++tested;
        for (double s : {0.5, 2.0}) {
            const double lhs = c_coeff(s, m * n);
            const double rhs = c_coeff(s, m) * c_coeff(s, n);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("coefficient jets agree with the literal divisor sum") {
    for (std::uint64_t j : {1ull, 2ull, 3ull, 4ull, 6ull, 12ull, 45ull, 360ull}) {
        const TaylorJet jet = c_jet(j, 2);
        CHECK(jet[0] == doctest::Approx(c_coeff(0.5, j)).epsilon(1e-13));
        for (int n = 1; n <= 2; ++n) {
            const FdResult fd = richardson_derivative(
                [j](double s) { return c_coeff(s, j); }, 0.5, n, 0.05, 4);
            CHECK(jet[n] == doctest::Approx(fd.value).epsilon(1e-7));
        }
    }
    CHECK_THROWS_AS(c_jet(0, 2), std::domain_error);
    CHECK_THROWS_AS(c_jet(6, -1), std::domain_error);
}

TEST_CASE("completed zeta values") {
    CHECK(zeta_star(2.0) == doctest::Approx(M_PI / 6.0).epsilon(1e-14));
    // pi^{-3/2} Gamma(3/2) zeta(3) = zeta(3) / (2 pi)
    CHECK(zeta_star(3.0) ==
          doctest::Approx(zeta_real(3.0) / (2.0 * M_PI)).epsilon(1e-14));
    CHECK(zeta_star(3.0) == doctest::Approx(0.19131329801558517).epsilon(1e-13));
    // long-double composition of the same factors as an independent route
    const long double ref = std::pow((long double)M_PI, -0.25L) *
                            std::tgammal(0.25L) * korder_test::zeta_long(0.5L);
    CHECK(zeta_star(0.5) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));
    CHECK(zeta_star(0.5) == doctest::Approx(-3.9769662255065129).epsilon(1e-13));
    CHECK_THROWS_AS(zeta_star(0.0), std::domain_error);
    CHECK_THROWS_AS(zeta_star(1.0), std::domain_error);
    CHECK_THROWS_AS(zeta_star(-1.0), std::domain_error);
}

TEST_CASE("partial series bookkeeping") {
    // single term: just the j = 1 Bessel value
    CHECK(h_partial(2.0, 1) == doctest::Approx(bessel_k(2.0, 2.0 * M_PI)).epsilon(1e-15));
    // the tail beyond j = 40 is negligible at this scale
    CHECK(h_partial(2.0, 60) == doctest::Approx(h_partial(2.0, 40)).epsilon(1e-13));
    // deterministic: bitwise identical across calls
    CHECK(h_partial(2.5, 60) == h_partial(2.5, 60));
    CHECK_THROWS_AS(h_partial(2.0, 0), std::domain_error);
    CHECK_THROWS_AS(h_partial(0.0, 10), std::domain_error);
}

TEST_CASE("series total matches its closed form across the strip") {
    for (double s : {1.5, 2.0, 2.5, 3.0, 4.0}) {
        const double lhs = h_partial(s, 60);
        const double rhs = h_closed(s);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
    CHECK(h_closed(2.0) == doctest::Approx(0.0014272714246121846).epsilon(1e-13));
    CHECK_THROWS_AS(h_closed(1.0), std::domain_error);
    CHECK_THROWS_AS(h_closed(0.0), std::domain_error);
}

TEST_CASE("alpha_term base cases") {
    // j = 1: coefficient jet is the constant 1, so the term is just the K jet
    CHECK(alpha_term(0, 1) ==
          doctest::Approx(0.5 * std::exp(-2.0 * M_PI)).epsilon(1e-13));
    CHECK(alpha_term(1, 1) == doctest::Approx(k_deriv1(2.0 * M_PI)).epsilon(1e-12));
    CHECK_THROWS_AS(alpha_term(5, 1), std::domain_error);
    CHECK_THROWS_AS(alpha_term(-1, 1), std::domain_error);
    CHECK_THROWS_AS(alpha_term(0, 0), std::domain_error);
}

TEST_CASE("alpha_0 reproduces the series value at the symmetric point") {
    // Closed-form jet route vs. the cosh-integral Bessel route of h_partial.
    CHECK(alpha_coeff(0, 60) == doctest::Approx(h_partial(0.5, 60)).epsilon(1e-9));
    CHECK(alpha_coeff(0, 60) == doctest::Approx(h_closed(0.5)).epsilon(1e-9));
    CHECK(alpha_coeff(0, 60) == doctest::Approx(0.0010991046468393351).epsilon(1e-10));
}

TEST_CASE("alpha coefficients against finite differences of the closed form") {
    const double frozen[] = {0.0010991046468393351, 5.0708212917499614e-05,
                             0.0001911604256667026};
    for (int n = 0; n <= 2; ++n) {
        const double a = alpha_coeff(n, 60);
        CHECK(a == doctest::Approx(frozen[n]).epsilon(1e-9));
        if (n == 0) {
            CHECK(a == doctest::Approx(h_closed(0.5)).epsilon(1e-9));
        } else {
            const FdResult fd =
                richardson_derivative([](double s) { return h_closed(s); }, 0.5,
                                      n, 0.05, 4);
            CHECK(a == doctest::Approx(fd.value).epsilon(1e-5));
        }
    }
    CHECK(alpha_coeff(1, 60) == alpha_coeff(1, 60));  // deterministic
    CHECK_THROWS_AS(alpha_coeff(5, 60), std::domain_error);
    CHECK_THROWS_AS(alpha_coeff(0, 0), std::domain_error);
}
