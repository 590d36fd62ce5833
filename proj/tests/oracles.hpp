// Test-only oracles, deliberately independent of the library code paths they
// check: plain finite differences, naive series summation, and composite
// Simpson quadrature built on std:: functions only.
#pragma once

#include <cmath>
#include <functional>

namespace oracle {

inline double fd_derivative(const std::function<double(double)>& f, double t,
                            double h = 1e-5) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Weighted finite difference t^{1-alpha} f'(t) / Gamma(beta+1) using
// std::tgamma, not the library gamma.
inline double fd_m_derivative(const std::function<double(double)>& f, double alpha,
                              double beta, double t, double h = 1e-5) {
    return std::pow(t, 1.0 - alpha) * fd_derivative(f, t, h) / std::tgamma(beta + 1.0);
}

// Brute-force Mittag-Leffler partial sum with a fixed term count.
inline double ml_series(double beta, double x, int terms) {
    double sum = 0.0;
    for (int k = 0; k < terms; ++k)
        sum += std::pow(x, k) / std::tgamma(beta * k + 1.0);
    return sum;
}

// Composite Simpson rule on a uniform grid; n must be even.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace oracle
