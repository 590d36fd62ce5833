#include "mcalc/theorems.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "mcalc/errors.hpp"

namespace mcalc {

namespace {

constexpr int kScanPoints = 1001;
constexpr int kMaxBisect = 200;

void require_witness_args(const FracOrder& ord, double a, double b, double tol,
                          const char* who) {
    validate(ord);
    if (!(a > 0.0)) throw DomainError(std::string(who) + ": a must be > 0");
    if (!(b > a)) throw DomainError(std::string(who) + ": b must be > a");
    if (!(tol > 0.0)) throw DomainError(std::string(who) + ": tol must be > 0");
}

// Scans phi = attained - target on a uniform grid, then bisects the first sign
// change. When every interior point already meets tol (constant-like phi) the
// midpoint is returned; otherwise the first qualifying point in grid order.
Witness scan_witness(const std::function<double(double)>& attained, double target, double a,
                     double b, double tol, const char* who) {
    auto phi = [&](double x) { return attained(x) - target; };
    std::vector<double> xs(kScanPoints), ps(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) {
        xs[i] = a + (b - a) * i / (kScanPoints - 1);
        ps[i] = phi(xs[i]);
        if (!std::isfinite(ps[i]))
            throw EvaluationError(std::string(who) + ": non-finite scan value");
    }

    bool all_qualify = true;
    for (int i = 1; i + 1 < kScanPoints; ++i)
        if (std::fabs(ps[i]) > tol) {
            all_qualify = false;
            break;
        }
    if (all_qualify) {
        const double mid = 0.5 * (a + b);
        return Witness{mid, attained(mid), target, std::fabs(phi(mid))};
    }

    double min_gap = std::fabs(ps[1]);
    for (int i = 1; i + 1 < kScanPoints; ++i) min_gap = std::min(min_gap, std::fabs(ps[i]));

    for (int i = 0; i + 1 < kScanPoints; ++i) {
        if (i > 0 && std::fabs(ps[i]) <= tol)
            return Witness{xs[i], attained(xs[i]), target, std::fabs(ps[i])};
        if (std::signbit(ps[i]) != std::signbit(ps[i + 1])) {
            double lo = xs[i], hi = xs[i + 1];
            double plo = ps[i];
            for (int iter = 0; iter < kMaxBisect; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const double pm = phi(mid);
                if (std::fabs(pm) <= tol)
                    return Witness{mid, attained(mid), target, std::fabs(pm)};
                if (std::signbit(pm) == std::signbit(plo)) {
                    lo = mid;
                    plo = pm;
                } else {
                    hi = mid;
                }
            }
            const double mid = 0.5 * (lo + hi);
            const double pm = phi(mid);
            if (std::fabs(pm) <= tol)
                return Witness{mid, attained(mid), target, std::fabs(pm)};
            throw SearchError(std::string(who) + ": bisection stalled above tol",
                              std::fabs(pm));
        }
    }
    throw SearchError(std::string(who) + ": no scan point met the tolerance", min_gap);
}

}  // namespace

Witness rolle_witness(const ScalarFn& f, const FracOrder& ord, double a, double b,
                      double tol) {
    require_witness_args(ord, a, b, tol, "rolle_witness");
    if (!f.has_derivative())
        throw ContractError("rolle_witness: classical_derivative required");
    const double fa = f.eval(a);
    const double fb = f.eval(b);
    if (std::fabs(fb - fa) > 1e-12 * (1.0 + std::fabs(fa)))
        throw ContractError("rolle_witness: hypothesis f(a) = f(b) violated");
    auto attained = [&](double x) { return m_derivative_closed(f, ord, x); };
    return scan_witness(attained, 0.0, a, b, tol, "rolle_witness");
}

Witness mvt_witness(const ScalarFn& f, const FracOrder& ord, double a, double b, double tol) {
    require_witness_args(ord, a, b, tol, "mvt_witness");
    if (!f.has_derivative()) throw ContractError("mvt_witness: classical_derivative required");
    // The Gamma(beta+1) factor cancels the one in the closed form, leaving the
    // beta-independent witness equation c^{1-alpha} f'(c) = (f(b)-f(a)) alpha / (b^a - a^a).
    const double target = (f.eval(b) - f.eval(a)) * ord.alpha /
                          ((std::pow(b, ord.alpha) - std::pow(a, ord.alpha)) *
                           gamma(ord.beta + 1.0));
    auto attained = [&](double x) { return m_derivative_closed(f, ord, x); };
    return scan_witness(attained, target, a, b, tol, "mvt_witness");
}

Witness extended_mvt_witness(const ScalarFn& f, const ScalarFn& g, const FracOrder& ord,
                             double a, double b, double tol) {
    require_witness_args(ord, a, b, tol, "extended_mvt_witness");
    if (!f.has_derivative() || !g.has_derivative())
        throw ContractError("extended_mvt_witness: classical derivatives required");
    const double dg_span = g.eval(b) - g.eval(a);
    if (std::fabs(dg_span) < 1e-9)
        throw DegenerateError("extended_mvt_witness: g(b) - g(a) is degenerate");
    const double target = (f.eval(b) - f.eval(a)) / dg_span;
    auto attained = [&](double x) {
        const double dg = m_derivative_closed(g, ord, x);
        if (std::fabs(dg) < 1e-12)
            throw DegenerateError("extended_mvt_witness: D_M g vanishes on the scan grid");
        return m_derivative_closed(f, ord, x) / dg;
    };
    return scan_witness(attained, target, a, b, tol, "extended_mvt_witness");
}

}  // namespace mcalc
