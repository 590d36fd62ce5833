#pragma once

#include <string>
#include <vector>

#include "mcalc/operators.hpp"
#include "mcalc/scalar_fn.hpp"

namespace mcalc::battery {

// CLI function registry. The *_frac entries depend on ord.alpha.
const std::vector<std::string>& registry_names();
ScalarFn make(const std::string& name, const FracOrder& ord);

// The ten smooth functions used by the limit/closed-form agreement checks:
// t^{1/2}, t, t^2, t^3, sin(a t), cos(a t), e^{a t},
// e^{t^alpha/alpha}, sin(t^alpha/alpha), cos(t^alpha/alpha).
std::vector<ScalarFn> agreement_battery(const FracOrder& ord, double a = 2.0);

// t^p with its derivative.
ScalarFn make_power(double p);

}  // namespace mcalc::battery
