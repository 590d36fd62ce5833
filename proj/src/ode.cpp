#include "mcalc/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mcalc/errors.hpp"
#include "mcalc/format.hpp"

namespace mcalc {

void validate(const Curve& curve) {
    if (curve.ts.size() != curve.us.size())
        throw DomainError("Curve: ts and us must have equal length");
    for (std::size_t i = 0; i < curve.ts.size(); ++i) {
        if (!std::isfinite(curve.ts[i]) || !std::isfinite(curve.us[i]))
            throw DomainError("Curve: entries must be finite");
        if (i > 0 && !(curve.ts[i] > curve.ts[i - 1]))
            throw DomainError("Curve: ts must be strictly increasing");
    }
}

namespace {

void require_grid(const std::vector<double>& ts, double lo, const char* who) {
    if (ts.empty()) throw DomainError(std::string(who) + ": empty grid");
    double prev = -std::numeric_limits<double>::infinity();
    for (double t : ts) {
        if (!std::isfinite(t) || t < lo)
            throw DomainError(std::string(who) + ": grid point below the left endpoint");
        if (!(t > prev))
            throw DomainError(std::string(who) + ": grid must be strictly increasing");
        prev = t;
    }
}

}  // namespace

Curve solve_linear(const LinearProblem& problem, const std::vector<double>& ts,
                   const QuadConfig& cfg) {
    validate(problem.ord);
    if (!(problem.a > 0.0)) throw DomainError("solve_linear: a must be > 0");
    require_grid(ts, problem.a, "solve_linear");
    const ScalarFn& P = problem.P;
    const ScalarFn& Q = problem.Q;
    const FracOrder ord = problem.ord;
    const double a = problem.a;
    ScalarFn q_mu = make_fn([P, Q, ord, a, cfg](double x) {
        // The outer quadrature's substitution round trip can land a hair
        // below a; the inner integral's lower limit must not exceed x.
        const double xc = std::max(x, a);
        return Q.eval(xc) * std::exp(m_integral(P, ord, a, xc, cfg));
    });
    Curve curve;
    curve.ts = ts;
    curve.us.reserve(ts.size());
    for (double t : ts) {
        const double mu = std::exp(m_integral(P, ord, a, t, cfg));
        if (!std::isfinite(mu) || mu == 0.0)
            throw RangeError("solve_linear: integrating factor out of range at t=" +
                             format_double(t));
        const double u = (m_integral(q_mu, ord, a, t, cfg) + problem.u0) / mu;
        if (!std::isfinite(u))
            throw RangeError("solve_linear: solution out of range at t=" + format_double(t));
        curve.us.push_back(u);
    }
    curve.meta = CurveMeta{ord.alpha, ord.beta, problem.u0, std::nullopt, P.label, Q.label};
    validate(curve);
    return curve;
}

Curve solve_eigen(double lambda, double u0, const FracOrder& ord,
                  const std::vector<double>& ts) {
    validate(ord);
    require_grid(ts, 0.0, "solve_eigen");
    const double rate = lambda * gamma(ord.beta + 1.0) / ord.alpha;
    Curve curve;
    curve.ts = ts;
    curve.us.reserve(ts.size());
    for (double t : ts) {
        const double u = u0 * std::exp(rate * std::pow(t, ord.alpha));
        if (!std::isfinite(u))
            throw RangeError("solve_eigen: solution out of range at t=" + format_double(t));
        curve.us.push_back(u);
    }
    curve.meta = CurveMeta{ord.alpha, ord.beta, u0, lambda, "-lambda", "0"};
    validate(curve);
    return curve;
}

double residual(const ScalarFn& curve_fn, const LinearProblem& problem,
                const std::vector<double>& ts) {
    validate(problem.ord);
    require_grid(ts, kMinT, "residual");
    const FracOrder ord = problem.ord;
    const double g = gamma(ord.beta + 1.0);
    double worst = 0.0;
    for (double t : ts) {
        const double du = curve_fn.has_derivative()
                              ? m_derivative_closed(curve_fn, ord, t)
                              : std::pow(t, 1.0 - ord.alpha) *
                                    nth_derivative(curve_fn, 1, t) / g;
        const double r =
            std::fabs(du + problem.P.eval(t) * curve_fn.eval(t) - problem.Q.eval(t));
        worst = std::max(worst, r);
    }
    return worst;
}

}  // namespace mcalc
