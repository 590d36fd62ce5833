#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcalc/battery.hpp"
#include "mcalc/errors.hpp"
#include "mcalc/integration.hpp"
#include "mcalc/special.hpp"
#include "oracles.hpp"

using namespace mcalc;

namespace {
constexpr double kIntConstExample = 3.5449077018110320546;  // Gamma(1.5) * 4^{0.5} / 0.5
constexpr double kSin2MinusSin1 = 0.067826442017785188744;
}  // namespace

TEST_CASE("weight-cancelling integrand reduces to the interval length") {
    // f(x) = x^{1-alpha} makes the weighted integrand constant 1.
    for (double alpha : {0.3, 0.5, 0.8}) {
        const FracOrder ord{alpha, 1.0};
        const ScalarFn f = battery::make_power(1.0 - alpha);
        CHECK(std::fabs(m_integral(f, ord, 1.0, 3.0) - 2.0) <= 1e-9);
    }
}

TEST_CASE("constant integrand from zero has the closed antiderivative") {
    const FracOrder ord{0.5, 0.5};
    const ScalarFn one = battery::make("const1", ord);
    const double got = m_integral(one, ord, 0.0, 4.0);
    CHECK(std::fabs(got - kIntConstExample) <= 1e-9);
    // general form Gamma(beta+1) t^alpha / alpha at other parameters
    for (double alpha : {0.25, 0.75}) {
        for (double beta : {1.0, 1.5}) {
            const FracOrder o{alpha, beta};
            const double want = mcalc::gamma(beta + 1.0) * std::pow(2.5, alpha) / alpha;
            CHECK(std::fabs(m_integral(one, o, 0.0, 2.5) - want) <= 1e-9 * want);
        }
    }
}

TEST_CASE("empty interval integrates to exactly zero") {
    const FracOrder ord{0.5, 1.0};
    const ScalarFn f = battery::make("exp", ord);
    CHECK(m_integral(f, ord, 1.5, 1.5) == 0.0);
    CHECK(m_integral(f, ord, 0.0, 0.0) == 0.0);
}

TEST_CASE("interval validation") {
    const FracOrder ord{0.5, 1.0};
    const ScalarFn f = battery::make("exp", ord);
    CHECK_THROWS_AS(m_integral(f, ord, 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(m_integral(f, ord, -0.5, 1.0), DomainError);
    CHECK_THROWS_AS(m_integral(f, ord, 0.5, 1.0, QuadConfig{1e-10, 1e-10, 4}), DomainError);
}

TEST_CASE("unbounded integrand near zero raises an accuracy error") {
    const FracOrder ord{0.5, 1.0};
    const ScalarFn f = make_fn([](double x) { return 1.0 / x; });
    CHECK_THROWS_AS(m_integral(f, ord, 0.0, 1.0), AccuracyError);
}

TEST_CASE("quadrature agrees with a Simpson oracle on a smooth case") {
    const FracOrder ord{0.6, 1.1};
    const ScalarFn f = battery::make("sin", ord);
    const double want =
        std::tgamma(2.1) *
        oracle::simpson([](double x) { return std::sin(x) * std::pow(x, -0.4); }, 0.5, 2.0,
                        20000);
    CHECK(std::fabs(m_integral(f, ord, 0.5, 2.0) - want) <= 1e-8 * std::fabs(want));
}

TEST_CASE("substituted and direct quadrature agree") {
    for (double alpha : {0.25, 0.5, 0.9}) {
        const FracOrder ord{alpha, 1.3};
        const ScalarFn f = battery::make("exp", ord);
        const double sub = m_integral(f, ord, 0.05, 2.0);
        const double direct = m_integral_direct(f, ord, 0.05, 2.0);
        CHECK(std::fabs(sub - direct) <= 1e-10 * std::fabs(direct));
    }
}

TEST_CASE("fundamental theorem round trip on sin") {
    const FracOrder ord{0.3, 0.7};
    const ScalarFn f = battery::make("sin", ord);
    const auto [lhs, rhs] = ftc_roundtrip(f, ord, 1.0, 2.0);
    CHECK(std::fabs(rhs - kSin2MinusSin1) <= 1e-12);
    CHECK(std::fabs(lhs - rhs) <= 1e-9);
}

TEST_CASE("fundamental theorem round trip on constants and frac powers") {
    const FracOrder ord{0.5, 1.5};
    const ScalarFn c = make_fn([](double) { return 9.0; }, [](double) { return 0.0; });
    const auto [lhs, rhs] = ftc_roundtrip(c, ord, 0.5, 3.0);
    CHECK(lhs == 0.0);
    CHECK(rhs == 0.0);

    const ScalarFn f = battery::make("frac_power", ord);
    const auto [l2, r2] = ftc_roundtrip(f, ord, 1.0, 4.0);
    const double want = (std::pow(4.0, ord.alpha) - 1.0) / ord.alpha;
    CHECK(std::fabs(r2 - want) <= 1e-12 * want);
    CHECK(std::fabs(l2 - r2) <= 1e-9 * want);
}

TEST_CASE("derivative of the running integral returns the integrand") {
    const QuadConfig tight{1e-12, 1e-12, 4000};
    const FracOrder ord{0.5, 1.0};
    const ScalarFn f = battery::make("sin", ord);
    const double t = 2.0, h = 1e-4, a = 0.5;
    const double d = std::pow(t, 1.0 - ord.alpha) *
                     (m_integral(f, ord, a, t + h, tight) -
                      m_integral(f, ord, a, t - h, tight)) /
                     (2.0 * h) / mcalc::gamma(ord.beta + 1.0);
    CHECK(std::fabs(d - f.eval(t)) <= 1e-6 * (1.0 + std::fabs(f.eval(t))));
}

TEST_CASE("integration by parts on x * x") {
    const FracOrder ord{0.5, 1.0};
    const ScalarFn x = battery::make_power(1.0);
    const double boundary = 2.0 * 2.0 - 1.0 * 1.0;
    CHECK(boundary == 3.0);
    CHECK(std::fabs(integration_by_parts_check(x, x, ord, 1.0, 2.0)) <=
          1e-8 * (1.0 + boundary));
}

TEST_CASE("integration by parts telescopes for constant f") {
    const FracOrder ord{0.4, 1.2};
    const ScalarFn c = make_fn([](double) { return 2.0; }, [](double) { return 0.0; });
    const ScalarFn g = battery::make("sin", ord);
    CHECK(std::fabs(integration_by_parts_check(c, g, ord, 0.5, 2.0)) <= 1e-8);
}

TEST_CASE("integration by parts on sin and exp") {
    const FracOrder ord{0.7, 1.5};
    const ScalarFn f = battery::make("sin", ord);
    const ScalarFn g = battery::make("exp", ord);
    const double boundary =
        f.eval(1.5) * g.eval(1.5) - f.eval(0.5) * g.eval(0.5);
    CHECK(std::fabs(integration_by_parts_check(f, g, ord, 0.5, 1.5)) <=
          1e-8 * (1.0 + std::fabs(boundary)));
}

TEST_CASE("bound chain on an oscillating integrand") {
    const FracOrder ord{0.5, 1.0};
    const ScalarFn f = make_fn([](double x) { return std::sin(5.0 * x); },
                               [](double x) { return 5.0 * std::cos(5.0 * x); });
    const BoundCheck bc = integral_bound_check(f, ord, 1.0, 4.0);
    CHECK(bc.abs_of_integral <= bc.integral_of_abs + 1e-10);
    CHECK(bc.integral_of_abs <= bc.sup_bound + 1e-10);
}

TEST_CASE("bound chain is tight for nonnegative and constant integrands") {
    const FracOrder ord{0.6, 1.4};
    const ScalarFn pos = battery::make("exp", ord);
    const BoundCheck b1 = integral_bound_check(pos, ord, 0.5, 2.0);
    CHECK(std::fabs(b1.abs_of_integral - b1.integral_of_abs) <= 1e-9);

    const ScalarFn c = make_fn([](double) { return -3.0; }, [](double) { return 0.0; });
    const BoundCheck b2 = integral_bound_check(c, ord, 1.0, 2.0);
    // sup equals |c|, so the bound matches the integral of |f|
    CHECK(std::fabs(b2.integral_of_abs - b2.sup_bound) <= 1e-9 * b2.sup_bound);
}

TEST_CASE("additivity over adjacent intervals") {
    const FracOrder ord{0.35, 0.8};
    const ScalarFn f = battery::make("cos", ord);
    const double whole = m_integral(f, ord, 0.4, 2.8);
    const double split = m_integral(f, ord, 0.4, 1.3) + m_integral(f, ord, 1.3, 2.8);
    CHECK(std::fabs(whole - split) <= 2e-10);
}
