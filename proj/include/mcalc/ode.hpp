#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcalc/integration.hpp"
#include "mcalc/operators.hpp"
#include "mcalc/scalar_fn.hpp"

namespace mcalc {

/// First-order linear problem D_M u + P u = Q on [a, inf) with u(a) = u0.
struct LinearProblem {
    ScalarFn P;
    ScalarFn Q;
    double a;   ///< left endpoint, > 0
    double u0;  ///< initial value u(a)
    FracOrder ord;
};

struct CurveMeta {
    double alpha = 0.0;
    double beta = 0.0;
    double u0 = 0.0;
    std::optional<double> lambda;  ///< set for eigen-equation curves
    std::string p_label;
    std::string q_label;
};

/// A sampled trajectory with strictly increasing abscissae.
struct Curve {
    std::vector<double> ts;
    std::vector<double> us;
    CurveMeta meta;
};

void validate(const Curve& curve);

/// Integrating-factor solution of the linear problem, sampled on ts:
///   mu(t) = exp(I_a^t P d_alpha x),  u(t) = (I_a^t Q mu d_alpha x + u0) / mu(t).
/// Both M-integrals vanish at t = a, which pins the constant to u(a) = u0.
/// Throws RangeError when the integrating factor over/underflows.
Curve solve_linear(const LinearProblem& problem, const std::vector<double>& ts,
                   const QuadConfig& cfg = {});

/// Eigen-equation D_M u = lambda u with u(0) = u0:
///   u(t) = u0 * exp(lambda * Gamma(beta+1) * t^alpha / alpha).
/// The positive sign of the exponent is forced by substitution: applying the
/// closed-form derivative to this u returns exactly lambda u (the residual
/// operation certifies it; a negated exponent solves D_M u = -lambda u
/// instead). The grid may start at t = 0, where the formula is analytic.
Curve solve_eigen(double lambda, double u0, const FracOrder& ord,
                  const std::vector<double>& ts);

/// Max over the grid of |D_M u(t) + P(t) u(t) - Q(t)| for a candidate
/// solution. Uses the analytic derivative of u when present, otherwise a
/// central finite difference, so it can certify solutions independently of
/// how they were produced.
double residual(const ScalarFn& curve_fn, const LinearProblem& problem,
                const std::vector<double>& ts);

}  // namespace mcalc
