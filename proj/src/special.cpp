#include "mcalc/special.hpp"

#include <cmath>

#include "mcalc/errors.hpp"

namespace mcalc {

void validate(const SeriesConfig& cfg) {
    if (!(cfg.rel_tol > 0.0 && cfg.rel_tol < 1.0))
        throw DomainError("SeriesConfig: rel_tol must lie in (0, 1)");
    if (cfg.max_terms < 2)
        throw DomainError("SeriesConfig: max_terms must be >= 2");
}

double gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("gamma: argument must be finite and positive");
    return std::tgamma(x);
}

double mittag_leffler(double beta, double x, const SeriesConfig& cfg) {
    validate(cfg);
    if (!std::isfinite(beta) || beta <= 0.0)
        throw DomainError("mittag_leffler: beta must be positive");
    if (!std::isfinite(x))
        throw DomainError("mittag_leffler: x must be finite");
    if (x == 0.0) return 1.0;  // only the k = 0 term survives

    const double ax = std::fabs(x);
    const double log_ax = std::log(ax);
    double sum = 1.0;
    double comp = 0.0;  // Kahan compensation
    double mag = 0.0;
    double prev_mag = 0.0;
    for (int k = 1; k < cfg.max_terms; ++k) {
        // term = x^k / Gamma(beta k + 1); direct evaluation while both factors
        // are representable, log space beyond (Gamma overflows past ~171 while
        // the term itself stays tiny).
        const double garg = beta * k + 1.0;
        if (garg <= 170.0 && k * log_ax < 700.0)
            mag = std::pow(ax, k) / std::tgamma(garg);
        else
            mag = std::exp(k * log_ax - std::lgamma(garg));
        const double term = (x < 0.0 && (k & 1)) ? -mag : mag;
        const double y = term - comp;
        const double next = sum + y;
        comp = (next - sum) - y;
        sum = next;
        if (k >= 2 && mag < prev_mag) {
            // Once the magnitudes decay, the remaining tail is bounded by the
            // geometric estimate mag * q / (1 - q); truncating on it keeps the
            // truncation error within rel_tol even for slowly decaying terms.
            const double q = mag / prev_mag;
            if (mag * q / (1.0 - q) <= cfg.rel_tol * std::fabs(sum)) return sum;
        }
        prev_mag = mag;
    }
    throw ConvergenceError("mittag_leffler: series not converged within max_terms", mag);
}

}  // namespace mcalc
