#pragma once

#include <utility>

#include "mcalc/operators.hpp"
#include "mcalc/scalar_fn.hpp"

namespace mcalc {

/// Control knobs for the adaptive quadrature backing the M-integral.
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdiv = 2000;  ///< >= 8
};

void validate(const QuadConfig& cfg);

/// M-integral Gamma(beta+1) * integral_a^t f(x) x^{alpha-1} dx, computed after
/// the substitution u = x^alpha, which turns it into
/// (Gamma(beta+1)/alpha) * integral_{a^alpha}^{t^alpha} f(u^{1/alpha}) du and
/// removes the endpoint singularity at a = 0 for bounded f.
///
/// m_integral(f, ord, a, a) == 0 exactly. Throws DomainError for t < a or
/// a < 0, AccuracyError when the quadrature cannot reach tolerance within
/// cfg.max_subdiv subdivisions (also the failure mode for f unbounded near 0).
double m_integral(const ScalarFn& f, const FracOrder& ord, double a, double t,
                  const QuadConfig& cfg = {});

/// Same integral without the substitution, for cross-checking the transformed
/// route. Requires a > 0 since the weight x^{alpha-1} is integrated directly.
double m_integral_direct(const ScalarFn& f, const FracOrder& ord, double a, double t,
                         const QuadConfig& cfg = {});

/// Fundamental-theorem round trip: lhs = M-integral of the closed-form
/// M-derivative of f over [a, t], rhs = f(t) - f(a). The two agree to
/// quadrature tolerance for differentiable f.
std::pair<double, double> ftc_roundtrip(const ScalarFn& f, const FracOrder& ord,
                                        double a, double t, const QuadConfig& cfg = {});

/// Integration-by-parts residual
///   integral_a^b f Dg d_alpha x - [f g]_a^b + integral_a^b g Df d_alpha x,
/// where d_alpha x carries the weight Gamma(beta+1) x^{alpha-1}. Near zero for
/// differentiable f, g.
double integration_by_parts_check(const ScalarFn& f, const ScalarFn& g,
                                  const FracOrder& ord, double a, double b,
                                  const QuadConfig& cfg = {});

struct BoundCheck {
    double abs_of_integral;   ///< |M-integral of f|
    double integral_of_abs;   ///< M-integral of |f|
    double sup_bound;         ///< Gamma(beta+1) * N * (t^alpha - a^alpha) / alpha
};

/// Evaluates the inequality chain |I f| <= I |f| <= Gamma(beta+1) N (t^alpha - a^alpha)/alpha
/// with N the sampled sup of |f| on a 1001-point grid (refined 10x when the
/// grid sup is marginally too small, since the grid value only underestimates
/// the true sup).
BoundCheck integral_bound_check(const ScalarFn& f, const FracOrder& ord, double a,
                                double t, const QuadConfig& cfg = {});

}  // namespace mcalc
