#include "mcalc/operators.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mcalc/errors.hpp"

namespace mcalc {

void validate(const FracOrder& ord) {
    if (!(ord.alpha > 0.0 && ord.alpha <= 1.0))
        throw DomainError("FracOrder: alpha must lie in (0, 1]");
    if (!std::isfinite(ord.beta) || ord.beta <= 0.0)
        throw DomainError("FracOrder: beta must be positive");
}

void validate(const LimitConfig& cfg) {
    if (!(cfg.eps0 > 0.0))
        throw DomainError("LimitConfig: eps0 must be positive");
    if (!(cfg.shrink > 0.0 && cfg.shrink < 1.0))
        throw DomainError("LimitConfig: shrink must lie in (0, 1)");
    if (cfg.levels < 1)
        throw DomainError("LimitConfig: levels must be >= 1");
}

LimitConfig default_limit_config(double t, double alpha) {
    return LimitConfig{1e-2 * std::pow(t, alpha), 0.5, 4};
}

namespace {

void require_t(double t, const char* who) {
    if (!std::isfinite(t) || t < kMinT)
        throw DomainError(std::string(who) + ": t must be >= " + std::to_string(kMinT));
}

void require_alpha01(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError(std::string(who) + ": alpha must lie in (0, 1]");
}

// Neville tableau on the geometric ladder eps_k = eps0 * shrink^k,
// eliminating the eps^1..eps^{n-1} error terms.
double richardson(const std::vector<double>& q, double shrink) {
    std::vector<double> t = q;
    const int n = static_cast<int>(q.size());
    double r = 1.0;
    for (int m = 1; m < n; ++m) {
        r *= shrink;
        for (int k = n - 1; k >= m; --k) t[k] = (t[k] - r * t[k - 1]) / (1.0 - r);
    }
    return t[n - 1];
}

template <typename Quotient>
double extrapolated_limit(Quotient&& quotient, const LimitConfig& cfg, const char* who) {
    std::vector<double> q(cfg.levels);
    double eps = cfg.eps0;
    for (int k = 0; k < cfg.levels; ++k) {
        q[k] = quotient(eps);
        if (!std::isfinite(q[k]))
            throw EvaluationError(std::string(who) + ": non-finite quotient at eps=" +
                                  std::to_string(eps));
        eps *= cfg.shrink;
    }
    return richardson(q, cfg.shrink);
}

// Nested central differences; the step widens with nesting depth to balance
// truncation against rounding.
double fd_nth(const RealFn& g, int m, double t) {
    if (m <= 0) return g(t);
    const double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (2.0 + m)) *
                     std::max(1.0, std::fabs(t));
    return (fd_nth(g, m - 1, t + h) - fd_nth(g, m - 1, t - h)) / (2.0 * h);
}

}  // namespace

double ml_dilation(double t, const FracOrder& ord, double eps, const SeriesConfig& series) {
    return t * mittag_leffler(ord.beta, eps * std::pow(t, -ord.alpha), series);
}

double m_derivative_closed(const ScalarFn& f, const FracOrder& ord, double t) {
    validate(ord);
    require_t(t, "m_derivative_closed");
    if (!f.has_derivative())
        throw ContractError("m_derivative_closed: classical_derivative required");
    return std::pow(t, 1.0 - ord.alpha) * f.classical_derivative(t) / gamma(ord.beta + 1.0);
}

double m_derivative_limit(const ScalarFn& f, const FracOrder& ord, double t,
                          const LimitConfig& cfg, const SeriesConfig& series) {
    validate(ord);
    validate(cfg);
    validate(series);
    require_t(t, "m_derivative_limit");
    const double ft = f.eval(t);
    return extrapolated_limit(
        [&](double eps) { return (f.eval(ml_dilation(t, ord, eps, series)) - ft) / eps; },
        cfg, "m_derivative_limit");
}

double m_derivative_limit(const ScalarFn& f, const FracOrder& ord, double t) {
    return m_derivative_limit(f, ord, t, default_limit_config(t, ord.alpha));
}

double m_derivative_higher(const ScalarFn& f, int n, double alpha_n, double beta, double t,
                           const RealFn& f_np1) {
    if (n < 0) throw DomainError("m_derivative_higher: n must be >= 0");
    if (!(alpha_n > n && alpha_n <= n + 1))
        throw DomainError("m_derivative_higher: alpha_n must lie in (n, n+1]");
    if (!std::isfinite(beta) || beta <= 0.0)
        throw DomainError("m_derivative_higher: beta must be positive");
    require_t(t, "m_derivative_higher");
    const double d = f_np1 ? f_np1(t) : nth_derivative(f, n + 1, t);
    return std::pow(t, n + 1 - alpha_n) * d / gamma(beta + 1.0);
}

double alternative_derivative(const ScalarFn& f, double alpha, double t,
                              const LimitConfig& cfg) {
    require_alpha01(alpha, "alternative_derivative");
    validate(cfg);
    require_t(t, "alternative_derivative");
    const double ft = f.eval(t);
    const double w = std::pow(t, -alpha);
    return extrapolated_limit(
        [&](double eps) { return (f.eval(t * std::exp(eps * w)) - ft) / eps; }, cfg,
        "alternative_derivative");
}

double alternative_derivative(const ScalarFn& f, double alpha, double t) {
    return alternative_derivative(f, alpha, t, default_limit_config(t, alpha));
}

double conformable_derivative(const ScalarFn& f, double alpha, double t,
                              const LimitConfig& cfg) {
    require_alpha01(alpha, "conformable_derivative");
    validate(cfg);
    require_t(t, "conformable_derivative");
    const double ft = f.eval(t);
    const double w = std::pow(t, 1.0 - alpha);
    return extrapolated_limit(
        [&](double eps) { return (f.eval(t + eps * w) - ft) / eps; }, cfg,
        "conformable_derivative");
}

double conformable_derivative(const ScalarFn& f, double alpha, double t) {
    return conformable_derivative(f, alpha, t, default_limit_config(t, alpha));
}

double nth_derivative(const ScalarFn& f, int m, double t) {
    if (m <= 0) return f.eval(t);
    if (f.has_derivative()) {
        if (m == 1) return f.classical_derivative(t);
        return fd_nth(f.classical_derivative, m - 1, t);
    }
    return fd_nth(f.eval, m, t);
}

}  // namespace mcalc
