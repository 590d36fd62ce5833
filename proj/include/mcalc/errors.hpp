#pragma once

#include <stdexcept>
#include <string>

namespace mcalc {

// Argument outside an operator's mathematical domain (t <= 0, order out of range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A required capability is missing, e.g. an operator that needs an analytic
// derivative was handed a function without one.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Series truncation failed to converge within the configured term budget.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double last_term_magnitude)
        : std::runtime_error(what), last_term(last_term_magnitude) {}
    double last_term;
};

// Adaptive quadrature exhausted its subdivision budget before reaching tolerance.
struct AccuracyError : std::runtime_error {
    AccuracyError(const std::string& what, double residual_estimate)
        : std::runtime_error(what), residual(residual_estimate) {}
    double residual;
};

// A difference quotient or integrand evaluated to a non-finite value.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Overflow of an intermediate quantity, e.g. the integrating factor.
struct RangeError : std::range_error {
    using std::range_error::range_error;
};

// A witness scan found no point meeting the requested tolerance.
struct SearchError : std::runtime_error {
    SearchError(const std::string& what, double min_gap_found)
        : std::runtime_error(what), min_gap(min_gap_found) {}
    double min_gap;
};

// Degenerate denominator in a ratio-based witness search.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mcalc
