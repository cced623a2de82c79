#pragma once

#include <cstddef>
#include <vector>

#include "korder/analytic_kernels.hpp"

// Minimal derivative-jet arithmetic.  A TaylorJet stores plain derivatives
// f(x0), f'(x0), ..., f^(n)(x0) (not divided by factorials); products follow
// the Leibniz rule.

namespace korder {

struct TaylorJet {
    std::vector<double> values;

    explicit TaylorJet(int order) : values(static_cast<size_t>(order) + 1, 0.0) {}

    static TaylorJet constant(int order, double v) {
        TaylorJet j(order);
        j.values[0] = v;
        return j;
    }

    int order() const { return static_cast<int>(values.size()) - 1; }
    double& operator[](int n) { return values[static_cast<size_t>(n)]; }
    double operator[](int n) const { return values[static_cast<size_t>(n)]; }
};

inline TaylorJet leibniz_product(const TaylorJet& f, const TaylorJet& g) {
    const int n = f.order() < g.order() ? f.order() : g.order();
    TaylorJet out(n);
    for (int m = 0; m <= n; ++m) {
        double acc = 0.0;
        for (int i = 0; i <= m; ++i)
            acc += static_cast<double>(binomial_exact(m, i)) * f[i] * g[m - i];
        out[m] = acc;
    }
    return out;
}

} // namespace korder
