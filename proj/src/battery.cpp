#include "mcalc/battery.hpp"

#include <cmath>

#include "mcalc/errors.hpp"

namespace mcalc::battery {

namespace {

ScalarFn frac_power_fn(double alpha) {
    // t^alpha / alpha with derivative t^{alpha-1}
    return make_fn([alpha](double t) { return std::pow(t, alpha) / alpha; },
                   [alpha](double t) { return std::pow(t, alpha - 1.0); }, "frac_power");
}

}  // namespace

ScalarFn make_power(double p) {
    return make_fn([p](double t) { return std::pow(t, p); },
                   [p](double t) { return p * std::pow(t, p - 1.0); },
                   "pow" + std::to_string(p));
}

const std::vector<std::string>& registry_names() {
    static const std::vector<std::string> names = {
        "square", "cube", "sqrt", "sin", "cos", "exp",
        "sin_frac", "cos_frac", "exp_frac", "const1"};
    return names;
}

ScalarFn make(const std::string& name, const FracOrder& ord) {
    validate(ord);
    const double alpha = ord.alpha;
    if (name == "square")
        return make_fn([](double t) { return t * t; }, [](double t) { return 2.0 * t; },
                       "square");
    if (name == "cube")
        return make_fn([](double t) { return t * t * t; },
                       [](double t) { return 3.0 * t * t; }, "cube");
    if (name == "sqrt")
        return make_fn([](double t) { return std::sqrt(t); },
                       [](double t) { return 0.5 / std::sqrt(t); }, "sqrt");
    if (name == "sin")
        return make_fn([](double t) { return std::sin(t); },
                       [](double t) { return std::cos(t); }, "sin");
    if (name == "cos")
        return make_fn([](double t) { return std::cos(t); },
                       [](double t) { return -std::sin(t); }, "cos");
    if (name == "exp")
        return make_fn([](double t) { return std::exp(t); },
                       [](double t) { return std::exp(t); }, "exp");
    if (name == "sin_frac")
        return make_fn(
            [alpha](double t) { return std::sin(std::pow(t, alpha) / alpha); },
            [alpha](double t) {
                return std::cos(std::pow(t, alpha) / alpha) * std::pow(t, alpha - 1.0);
            },
            "sin_frac");
    if (name == "cos_frac")
        return make_fn(
            [alpha](double t) { return std::cos(std::pow(t, alpha) / alpha); },
            [alpha](double t) {
                return -std::sin(std::pow(t, alpha) / alpha) * std::pow(t, alpha - 1.0);
            },
            "cos_frac");
    if (name == "exp_frac")
        return make_fn(
            [alpha](double t) { return std::exp(std::pow(t, alpha) / alpha); },
            [alpha](double t) {
                return std::exp(std::pow(t, alpha) / alpha) * std::pow(t, alpha - 1.0);
            },
            "exp_frac");
    if (name == "const1")
        return make_fn([](double) { return 1.0; }, [](double) { return 0.0; }, "const1");
    if (name == "frac_power") return frac_power_fn(alpha);
    throw DomainError("battery: unknown function name '" + name + "'");
}

std::vector<ScalarFn> agreement_battery(const FracOrder& ord, double a) {
    std::vector<ScalarFn> fns;
    for (double p : {0.5, 1.0, 2.0, 3.0}) fns.push_back(make_power(p));
    fns.push_back(make_fn([a](double t) { return std::sin(a * t); },
                          [a](double t) { return a * std::cos(a * t); }, "sin_at"));
    fns.push_back(make_fn([a](double t) { return std::cos(a * t); },
                          [a](double t) { return -a * std::sin(a * t); }, "cos_at"));
    fns.push_back(make_fn([a](double t) { return std::exp(a * t); },
                          [a](double t) { return a * std::exp(a * t); }, "exp_at"));
    fns.push_back(make(std::string("exp_frac"), ord));
    fns.push_back(make(std::string("sin_frac"), ord));
    fns.push_back(make(std::string("cos_frac"), ord));
    return fns;
}

}  // namespace mcalc::battery
