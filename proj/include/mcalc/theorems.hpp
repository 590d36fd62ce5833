#pragma once

#include "mcalc/operators.hpp"
#include "mcalc/scalar_fn.hpp"

namespace mcalc {

/// A point certifying an existence theorem to a stated numerical gap.
struct Witness {
    double c;               ///< interior point, a < c < b
    double attained_value;  ///< the quantity evaluated at c
    double target_value;    ///< the value the theorem asserts is attained
    double gap;             ///< |attained_value - target_value|
};

/// Rolle: for f with f(a) = f(b), finds c in (a, b) with |D_M f(c)| <= tol.
/// Scans 1001 points for a sign change of D_M f (bisected) or a direct hit;
/// when every scan point qualifies (constant f) the midpoint is returned.
/// Throws ContractError when f(a) != f(b), SearchError when no point meets tol.
Witness rolle_witness(const ScalarFn& f, const FracOrder& ord, double a, double b,
                      double tol = 1e-10);

/// Mean value theorem: finds c with |D_M f(c) - target| <= tol, where
///   target = (f(b) - f(a)) / (Gamma(beta+1) * (b^alpha - a^alpha) / alpha).
/// The Gamma(beta+1) factor makes the witness equation
/// c^{1-alpha} f'(c) = (f(b)-f(a)) alpha / (b^alpha - a^alpha), which is
/// guaranteed solvable and independent of beta.
Witness mvt_witness(const ScalarFn& f, const FracOrder& ord, double a, double b,
                    double tol = 1e-10);

/// Extended mean value theorem: finds c with
/// |D_M f(c) / D_M g(c) - (f(b)-f(a))/(g(b)-g(a))| <= tol. The t^{1-alpha} and
/// Gamma(beta+1) weights cancel in the ratio, so the witness matches the
/// classical Cauchy point. Throws DegenerateError when g(b) = g(a) or D_M g
/// vanishes on the scan grid.
Witness extended_mvt_witness(const ScalarFn& f, const ScalarFn& g, const FracOrder& ord,
                             double a, double b, double tol = 1e-10);

}  // namespace mcalc
