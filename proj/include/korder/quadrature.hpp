#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "korder/config.hpp"

// Double-exponential quadrature for the damped log-power integral family
//
//   U[a,b,eps](x) = Int_0^inf e^{-x u} log^a(u+2) log^b(u) (u+2)^{-eps} du
//
// which every higher-order derivative assembly reduces to.  The integrable
// log^b singularity at u = 0 is absorbed by a tanh-sinh transform on (0,1);
// the tail is handled on (1, inf) by an exp-sinh transform riding on the
// e^{-xu} decay.

namespace korder {

struct QuadratureSpec {
    int log_u_plus_2_pow = 0;  // a: power of log(u+2)
    int log_u_pow = 0;         // b: power of log(u)
    int inv_u_plus_2_pow = 0;  // eps: power of 1/(u+2)
    double x = 1.0;            // damping rate

    // "U[a,b,eps](x=...)" -- used in diagnostics and error messages.
    std::string label() const;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;  // from nested step-halving differences
    long evaluations = 0;             // total integrand evaluations
};

// Raised when the step-halving cap is hit before the requested tolerance;
// carries the best estimate obtained so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, QuadratureResult best)
        : std::runtime_error(msg), best_(best) {}
    const QuadratureResult& best() const { return best_; }

private:
    QuadratureResult best_;
};

// One member of the family, to absolute tolerance tol.
QuadratureResult u_integral(const QuadratureSpec& spec,
                            double tol = Defaults::quad_tol);

// One-pass evaluation of  sum_{(a,b)} coeffs[(a,b)] * U[a,b,eps](x), sharing
// a single pair of transformed node sets across all terms.
QuadratureResult damped_log_poly_integral(
    const std::map<std::pair<int, int>, double>& coeffs,
    int inv_u_plus_2_pow, double x, double tol = Defaults::quad_tol);

// Exponential integral E1(z), z > 0: Maclaurin-type series up to z = 1,
// modified-Lentz continued fraction beyond.  Relative accuracy ~1e-14.
double exp_integral_e1(double z);

} // namespace korder
