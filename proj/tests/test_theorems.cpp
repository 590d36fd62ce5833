#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcalc/battery.hpp"
#include "mcalc/errors.hpp"
#include "mcalc/operators.hpp"
#include "mcalc/special.hpp"
#include "mcalc/theorems.hpp"

using namespace mcalc;

namespace {
constexpr double kMvtC = 2.4137234615140743946;  // (3.75)^{2/3}
const double kPi = std::acos(-1.0);
}  // namespace

TEST_CASE("rolle witness on a quadratic with interior root of f'") {
    const ScalarFn f = make_fn([](double t) { return (t - 1.0) * (t - 3.0); },
                               [](double t) { return 2.0 * t - 4.0; });
    for (double alpha : {0.25, 0.5, 1.0}) {
        for (double beta : {0.5, 1.0, 2.0}) {
            const Witness w = rolle_witness(f, FracOrder{alpha, beta}, 1.0, 3.0);
            CHECK(std::fabs(w.c - 2.0) <= 1e-9);
            CHECK(w.gap <= 1e-10);
            CHECK(w.target_value == 0.0);
            CHECK(w.c > 1.0);
            CHECK(w.c < 3.0);
        }
    }
}

TEST_CASE("rolle witness on a sine arc") {
    const ScalarFn f = make_fn([](double t) { return std::sin(t); },
                               [](double t) { return std::cos(t); });
    const Witness w = rolle_witness(f, FracOrder{0.5, 1.0}, kPi / 4.0, 3.0 * kPi / 4.0);
    CHECK(std::fabs(w.c - kPi / 2.0) <= 1e-9);
    CHECK(w.gap <= 1e-10);
}

TEST_CASE("rolle witness of a constant is the midpoint") {
    const ScalarFn f = make_fn([](double) { return 5.0; }, [](double) { return 0.0; });
    const Witness w = rolle_witness(f, FracOrder{0.7, 1.2}, 1.0, 2.0);
    CHECK(w.c == 1.5);
    CHECK(w.gap == 0.0);
}

TEST_CASE("rolle hypothesis violation is rejected") {
    const ScalarFn f = battery::make_power(1.0);
    CHECK_THROWS_AS(rolle_witness(f, FracOrder{0.5, 1.0}, 1.0, 2.0), ContractError);
}

TEST_CASE("mvt witness on t^2 over [1, 4] at beta = 1") {
    const ScalarFn f = battery::make_power(2.0);
    const Witness w = mvt_witness(f, FracOrder{0.5, 1.0}, 1.0, 4.0);
    CHECK(std::fabs(w.target_value - 7.5) <= 1e-12);
    CHECK(std::fabs(w.c - kMvtC) <= 1e-8);
    CHECK(w.gap <= 1e-10);
}

TEST_CASE("mvt witness point does not move with beta") {
    const ScalarFn f = battery::make_power(2.0);
    const Witness w1 = mvt_witness(f, FracOrder{0.5, 0.5}, 1.0, 4.0, 1e-12);
    const Witness w2 = mvt_witness(f, FracOrder{0.5, 1.5}, 1.0, 4.0, 1e-12);
    CHECK(std::fabs(w1.c - kMvtC) <= 1e-6);
    CHECK(std::fabs(w2.c - kMvtC) <= 1e-6);
    // attained values scale by the Gamma ratio
    const double ratio = w1.attained_value / w2.attained_value;
    CHECK(std::fabs(ratio - mcalc::gamma(2.5) / mcalc::gamma(1.5)) <= 1e-6 * ratio);
}

TEST_CASE("mvt on t^alpha/alpha accepts every point and returns the midpoint") {
    for (double beta : {0.5, 1.0, 1.7}) {
        const FracOrder ord{0.6, beta};
        const ScalarFn f = battery::make("frac_power", ord);
        const Witness w = mvt_witness(f, ord, 1.0, 3.0);
        CHECK(w.c == 2.0);
        CHECK(w.gap <= 1e-12);
        CHECK(std::fabs(w.attained_value * mcalc::gamma(beta + 1.0) - 1.0) <= 1e-12);
    }
}

TEST_CASE("mvt witness of a constant has target zero") {
    const ScalarFn f = make_fn([](double) { return 2.0; }, [](double) { return 0.0; });
    const Witness w = mvt_witness(f, FracOrder{0.4, 1.1}, 0.5, 2.5);
    CHECK(w.target_value == 0.0);
    CHECK(w.gap == 0.0);
}

TEST_CASE("extended mvt on t^2 and t^3 over [1, 2]") {
    const Witness w = extended_mvt_witness(battery::make_power(2.0),
                                           battery::make_power(3.0),
                                           FracOrder{0.5, 1.0}, 1.0, 2.0);
    CHECK(std::fabs(w.target_value - 3.0 / 7.0) <= 1e-14);
    CHECK(std::fabs(w.c - 14.0 / 9.0) <= 1e-8);
    CHECK(w.gap <= 1e-10);
}

TEST_CASE("extended mvt with f = g is the constant ratio 1") {
    const ScalarFn f = battery::make_power(2.0);
    const Witness w = extended_mvt_witness(f, f, FracOrder{0.8, 1.4}, 0.5, 2.0);
    CHECK(std::fabs(w.attained_value - 1.0) <= 1e-12);
    CHECK(w.gap <= 1e-12);
}

TEST_CASE("extended mvt with g = t^alpha/alpha reduces to the mvt witness") {
    const FracOrder ord{0.6, 1.4};
    const ScalarFn f = battery::make_power(3.0);
    const ScalarFn g = battery::make("frac_power", ord);
    const Witness we = extended_mvt_witness(f, g, ord, 1.0, 2.5);
    const Witness wm = mvt_witness(f, ord, 1.0, 2.5);
    CHECK(std::fabs(we.c - wm.c) <= 1e-7);
}

TEST_CASE("extended mvt degenerate denominator") {
    const ScalarFn f = battery::make_power(2.0);
    const ScalarFn g = make_fn([](double) { return 1.0; }, [](double) { return 0.0; });
    CHECK_THROWS_AS(extended_mvt_witness(f, g, FracOrder{0.5, 1.0}, 1.0, 2.0),
                    DegenerateError);
}

TEST_CASE("weight cancellation: derivative ratios equal classical ratios") {
    const ScalarFn f = battery::make_power(2.0);
    const ScalarFn g = battery::make_power(3.0);
    for (double alpha : {0.3, 0.7, 1.0}) {
        for (double beta : {0.5, 1.5}) {
            const FracOrder ord{alpha, beta};
            for (double t : {0.8, 1.7, 3.1}) {
                const double lhs =
                    m_derivative_closed(f, ord, t) / m_derivative_closed(g, ord, t);
                const double rhs = f.classical_derivative(t) / g.classical_derivative(t);
                CHECK(std::fabs(lhs - rhs) <= 1e-13 * (1.0 + std::fabs(rhs)));
            }
        }
    }
}

TEST_CASE("search failure is reported when the hypotheses are broken") {
    // A step function with an inconsistent flat derivative: no point attains
    // the mean value target, so the scan must report its best gap.
    const ScalarFn step = make_fn([](double t) { return t < 1.5 ? 0.0 : 1.0; },
                                  [](double) { return 0.0; }, "step");
    try {
        mvt_witness(step, FracOrder{0.5, 1.0}, 1.0, 2.0);
        FAIL("expected SearchError");
    } catch (const SearchError& e) {
        CHECK(e.min_gap > 0.0);
    }
}

TEST_CASE("witness argument validation") {
    const ScalarFn f = battery::make_power(2.0);
    CHECK_THROWS_AS(mvt_witness(f, FracOrder{0.5, 1.0}, -1.0, 2.0), DomainError);
    CHECK_THROWS_AS(mvt_witness(f, FracOrder{0.5, 1.0}, 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(mvt_witness(f, FracOrder{0.5, 1.0}, 1.0, 2.0, 0.0), DomainError);
    const ScalarFn no_deriv = make_fn([](double t) { return t * t; });
    CHECK_THROWS_AS(mvt_witness(no_deriv, FracOrder{0.5, 1.0}, 1.0, 2.0), ContractError);
}
