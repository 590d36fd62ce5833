#pragma once

#include "mcalc/scalar_fn.hpp"
#include "mcalc/special.hpp"

namespace mcalc {

/// Order pair of the M-derivative: alpha in (0, 1], beta > 0.
struct FracOrder {
    double alpha;
    double beta;
};

void validate(const FracOrder& ord);

/// Geometric epsilon ladder for the limit-definition derivatives. The
/// difference quotient is evaluated at eps0 * shrink^k, k = 0..levels-1, and
/// Richardson-extrapolated to eps -> 0 assuming a leading O(eps) error term.
struct LimitConfig {
    double eps0;          ///< first rung, > 0
    double shrink = 0.5;  ///< ratio between rungs, in (0, 1)
    int levels = 4;       ///< ladder rungs / extrapolation levels, >= 1
};

void validate(const LimitConfig& cfg);

/// Scale-aware default ladder: eps0 = 1e-2 * t^alpha keeps the dilation
/// argument eps * t^{-alpha} at 1e-2 regardless of t.
LimitConfig default_limit_config(double t, double alpha);

/// Smallest t accepted by the derivative operators. Below it the weight
/// t^{1-alpha} and the dilation argument eps * t^{-alpha} are numerically
/// unusable even though the one-sided limit exists analytically.
inline constexpr double kMinT = 1e-6;

/// Dilated abscissa t * E_beta(eps * t^{-alpha}).
double ml_dilation(double t, const FracOrder& ord, double eps,
                   const SeriesConfig& series = {});

/// Closed form of the M-derivative, t^{1-alpha} * f'(t) / Gamma(beta+1).
/// Requires f.classical_derivative (ContractError otherwise).
double m_derivative_closed(const ScalarFn& f, const FracOrder& ord, double t);

/// Limit definition of the M-derivative: the extrapolated limit of
/// [f(t * E_beta(eps t^{-alpha})) - f(t)] / eps on the epsilon ladder.
/// Agrees with m_derivative_closed to <= 1e-6 relative on smooth f.
double m_derivative_limit(const ScalarFn& f, const FracOrder& ord, double t,
                          const LimitConfig& cfg, const SeriesConfig& series = {});
double m_derivative_limit(const ScalarFn& f, const FracOrder& ord, double t);

/// Order-n M-derivative, t^{n+1-alpha_n} * f^(n+1)(t) / Gamma(beta+1) for
/// alpha_n in (n, n+1]. The (n+1)-th derivative is taken from f_np1 when
/// supplied, otherwise by nested central differences of classical_derivative
/// (or of eval when no analytic derivative is present). n = 0 coincides with
/// m_derivative_closed.
double m_derivative_higher(const ScalarFn& f, int n, double alpha_n, double beta,
                           double t, const RealFn& f_np1 = {});

/// Alternative derivative: extrapolated limit of
/// [f(t * e^{eps t^{-alpha}}) - f(t)] / eps. This is the beta = 1 instance of
/// the M-derivative. alpha = 1 is accepted as the classical endpoint.
double alternative_derivative(const ScalarFn& f, double alpha, double t,
                              const LimitConfig& cfg);
double alternative_derivative(const ScalarFn& f, double alpha, double t);

/// Conformable derivative: extrapolated limit of
/// [f(t + eps t^{1-alpha}) - f(t)] / eps. alpha = 1 is accepted as the
/// classical endpoint.
double conformable_derivative(const ScalarFn& f, double alpha, double t,
                              const LimitConfig& cfg);
double conformable_derivative(const ScalarFn& f, double alpha, double t);

/// m-th classical derivative of f at t. Uses the analytic derivative where
/// available and nested central differences beyond it.
double nth_derivative(const ScalarFn& f, int m, double t);

}  // namespace mcalc
