#include "korder/zeta_link.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "korder/analytic_kernels.hpp"
#include "korder/bessel_reference.hpp"
#include "korder/order_derivatives.hpp"

namespace korder {

namespace {

// Fixed reduction tree: the split point depends only on the index range, so
// the rounding pattern is identical from run to run (and would stay identical
// under any future parallel split along the same tree).
double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
    if (hi - lo <= 4) {
        double acc = 0.0;
        for (size_t i = lo; i < hi; ++i) acc += v[i];
        return acc;
    }
    const size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

std::vector<std::uint64_t> divisors_of(const FactoredInteger& f) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : f.prime_powers) {
        const size_t base = out.size();
        std::uint64_t pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t k = 0; k < base; ++k) out.push_back(out[k] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

FactoredInteger FactoredInteger::factor(std::uint64_t n) {
    if (n == 0) throw std::domain_error("FactoredInteger: n must be >= 1");
    FactoredInteger f;
    f.value = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            f.prime_powers.emplace_back(d, e);
        }
    }
    if (n > 1) f.prime_powers.emplace_back(n, 1);
    return f;
}

std::uint64_t sigma1_prime_power(std::uint64_t p, int e) {
    std::uint64_t acc = 1, pw = 1;
    for (int i = 1; i <= e; ++i) {
        pw *= p;
        acc += pw;
    }
    return acc;
}

std::uint64_t a_fn(std::uint64_t j) {
    std::uint64_t acc = 1;
    for (const auto& [p, e] : FactoredInteger::factor(j).prime_powers) {
        std::uint64_t local = 1;
        if (p == 2) {
            for (int i = 0; i < e; ++i) local *= 2;  // the full power itself
        } else {
            local = sigma1_prime_power(p, e);
        }
        acc *= local;
    }
    return acc;
}

std::uint64_t b_fn(std::uint64_t j) {
    if (j % 2 == 0) return 0;
    std::uint64_t acc = 1;
    for (const auto& [p, e] : FactoredInteger::factor(j).prime_powers)
        acc *= sigma1_prime_power(p, e);
    return acc;
}

double c_coeff(double s, std::uint64_t j) {
    if (j == 0) throw std::domain_error("c_coeff: j must be >= 1");
    // The divisor sum evaluated literally (the multiplicativity in j is a
    // property the tests verify, not something baked into the evaluation).
    const FactoredInteger f = FactoredInteger::factor(j);
    double acc = 0.0;
    for (std::uint64_t d : divisors_of(f)) {
        const std::uint64_t bv = b_fn(j / d);
        if (bv == 0) continue;
        const double ratio =
            static_cast<double>(j) / (static_cast<double>(d) * static_cast<double>(d));
        acc += static_cast<double>(a_fn(d)) * static_cast<double>(bv) *
               std::pow(ratio, 0.5 * s);
    }
    return acc;
}

TaylorJet c_jet(std::uint64_t j, int n_max) {
    if (j == 0) throw std::domain_error("c_jet: j must be >= 1");
    if (n_max < 0) throw std::domain_error("c_jet: n_max must be >= 0");
    // Per prime power the local coefficient is a finite sum of exponentials
    // in s, so its derivatives are available exactly; the jet for j is the
    // Leibniz product over its prime powers.
    TaylorJet jet = TaylorJet::constant(n_max, 1.0);
    for (const auto& [p, e] : FactoredInteger::factor(j).prime_powers) {
        TaylorJet local(n_max);
        const double logp = std::log(static_cast<double>(p));
        for (int i = 0; i <= e; ++i) {
            std::uint64_t apart = p == 2 ? (i ? (std::uint64_t{1} << i) : 1)
                                         : sigma1_prime_power(p, i);
            std::uint64_t bpart;
            if (p == 2) {
                if (i != e) continue;  // even cofactor kills the term
                bpart = 1;
            } else {
                bpart = sigma1_prime_power(p, e - i);
            }
            const double lambda = 0.5 * static_cast<double>(e - 2 * i) * logp;
            const double base =
                std::pow(static_cast<double>(p), 0.25 * static_cast<double>(e - 2 * i));
            double lam_pow = 1.0;
            for (int m = 0; m <= n_max; ++m) {
                local[m] += static_cast<double>(apart) * static_cast<double>(bpart) *
                            lam_pow * base;
                lam_pow *= lambda;
            }
        }
        jet = leibniz_product(jet, local);
    }
    return jet;
}

double zeta_star(double s) {
    if (!(s > 0.0) || s == 1.0)
        throw std::domain_error("zeta_star: need s > 0, s != 1");
    return std::pow(M_PI, -0.5 * s) * gamma_real(0.5 * s) * zeta_real(s);
}

double h_partial(double s, int j_max) {
    if (j_max < 1) throw std::domain_error("h_partial: j_max must be >= 1");
    if (!(s > 0.0)) throw std::domain_error("h_partial: need s > 0");
    std::vector<double> terms(static_cast<size_t>(j_max));
    for (int j = 1; j <= j_max; ++j) {
        const double xj = 2.0 * M_PI * std::sqrt(static_cast<double>(j));
        terms[static_cast<size_t>(j) - 1] =
            c_coeff(s, static_cast<std::uint64_t>(j)) * bessel_k(s, xj);
    }
    return pairwise_sum(terms, 0, terms.size());
}

double h_closed(double s) {
    if (!(s > 0.0) || s == 1.0)
        throw std::domain_error("h_closed: need s > 0, s != 1");
    const double front = s * (s + 1.0) / (32.0 * M_PI * M_PI * std::sqrt(2.0));
    const double f1 = std::pow(2.0, 0.5 * s) - std::pow(2.0, -0.5 * s);
    const double f2 =
        std::pow(2.0, 0.5 * (s - 1.0)) - std::pow(2.0, -0.5 * (s - 1.0));
    return front * f1 * f2 * zeta_star(s) * zeta_star(s + 1.0);
}

double alpha_term(int n, std::uint64_t j) {
    if (n < 0 || n > 4) throw std::domain_error("alpha_term: need 0 <= n <= 4");
    if (j == 0) throw std::domain_error("alpha_term: j must be >= 1");
    const double xj = 2.0 * M_PI * std::sqrt(static_cast<double>(j));
    const TaylorJet cj = c_jet(j, n);
    const TaylorJet kj = k_jet(n, xj);
    double acc = 0.0;
    for (int m = 0; m <= n; ++m)
        acc += static_cast<double>(binomial_exact(n, m)) * cj[m] * kj[n - m];
    return acc;
}

double alpha_coeff(int n, int j_max) {
    if (n < 0 || n > 4) throw std::domain_error("alpha_coeff: need 0 <= n <= 4");
    if (j_max < 1) throw std::domain_error("alpha_coeff: j_max must be >= 1");
    std::vector<double> terms(static_cast<size_t>(j_max));
    for (int j = 1; j <= j_max; ++j)
        terms[static_cast<size_t>(j) - 1] =
            alpha_term(n, static_cast<std::uint64_t>(j));
    return pairwise_sum(terms, 0, terms.size());
}

} // namespace korder
