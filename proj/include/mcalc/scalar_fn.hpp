#pragma once

#include <functional>
#include <string>
#include <utility>

namespace mcalc {

using RealFn = std::function<double(double)>;

/// An evaluable real function on (0, inf).
///
/// The classical derivative, when present, is the preferred channel for the
/// closed-form operators; finite differences of eval are the fallback.
struct ScalarFn {
    RealFn eval;
    RealFn classical_derivative;  ///< empty when unknown
    std::string label;

    bool has_derivative() const { return static_cast<bool>(classical_derivative); }
    double operator()(double t) const { return eval(t); }
};

inline ScalarFn make_fn(RealFn f, std::string label = {}) {
    return ScalarFn{std::move(f), {}, std::move(label)};
}

inline ScalarFn make_fn(RealFn f, RealFn df, std::string label = {}) {
    return ScalarFn{std::move(f), std::move(df), std::move(label)};
}

}  // namespace mcalc
