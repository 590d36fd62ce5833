#pragma once

namespace mcalc {

/// Truncation control for the Mittag-Leffler power series.
struct SeriesConfig {
    double rel_tol = 1e-15;  ///< relative truncation tolerance, in (0, 1)
    int max_terms = 200;     ///< cap on summed terms, >= 2
};

void validate(const SeriesConfig& cfg);

/// Gamma function for x > 0. Relative error <= 1e-12 on (0, 170].
/// Throws DomainError for non-finite or non-positive arguments.
double gamma(double x);

/// One-parameter Mittag-Leffler function E_beta(x) = sum_k x^k / Gamma(beta*k + 1).
///
/// The sum is truncated once a term's magnitude drops below
/// cfg.rel_tol * |partial sum|. E_beta(0) == 1 exactly. Throws
/// ConvergenceError (carrying the last term magnitude) when the series has
/// not converged within cfg.max_terms.
double mittag_leffler(double beta, double x, const SeriesConfig& cfg = {});

}  // namespace mcalc
