#include <doctest.h>

#include <cmath>

#include "modbound/numerics.hpp"

using namespace modbound;

TEST_CASE("fd_derivative central mode is exact on cubics") {
    auto f = [](double x) { return 2.0 * x * x * x - x * x + 4.0 * x - 1.0; };
    const FdResult d = fd_derivative(f, 1.5, 1e-3);
    // f' = 6x^2 - 2x + 4 -> 14.5 at x = 1.5; Richardson kills the h^2 term
    CHECK(d.value == doctest::Approx(14.5).epsilon(1e-12));
    CHECK(std::abs(d.value - 14.5) <= d.error_estimate + 1e-10);
}

TEST_CASE("fd_derivative error estimate covers sin") {
    auto f = [](double x) { return std::sin(3.0 * x); };
    for (double h : {1e-2, 1e-3, 1e-4}) {
        const FdResult d = fd_derivative(f, 0.7, h);
        const double exact = 3.0 * std::cos(3.0 * 0.7);
        CHECK(std::abs(d.value - exact) <= 10.0 * d.error_estimate + 1e-12);
    }
}

TEST_CASE("fd_derivative forward mode matches the finite quotient") {
    auto f = [](double x) { return x * x; };
    const FdResult d = fd_derivative(f, 1.0, 0.5, FdMode::forward);
    CHECK(d.value == doctest::Approx((2.25 - 1.0) / 0.5).epsilon(1e-14));
    CHECK_THROWS_AS(fd_derivative(f, 0.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(fd_derivative(f, 0.0, -1.0), InvalidInput);
}

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
    // 16-point rule is exact through degree 31 per panel
    auto poly = [](double x) { return 5.0 * std::pow(x, 9) - 3.0 * std::pow(x, 4) + x; };
    const double got = integrate_gl(poly, -1.0, 2.0, 1);
    // integral: x^10/2 - 3x^5/5 + x^2/2 on [-1,2]
    auto anti = [](double x) {
        return 0.5 * std::pow(x, 10) - 0.6 * std::pow(x, 5) + 0.5 * x * x;
    };
    CHECK(got == doctest::Approx(anti(2.0) - anti(-1.0)).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre composite converges on oscillatory integrand") {
    auto f = [](double x) { return std::cos(7.0 * x); };
    const double exact = (std::sin(7.0 * 3.0) - std::sin(0.0)) / 7.0;
    CHECK(integrate_gl(f, 0.0, 3.0, 8) == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("GaussLegendreRule weights sum to 2") {
    for (std::size_t n : {4u, 16u, 33u}) {
        GaussLegendreRule r(n);
        double sum = 0.0;
        for (double w : r.weights) sum += w;
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
        for (std::size_t i = 1; i < n; ++i) {
            CHECK(r.nodes[i] > r.nodes[i - 1]);
        }
    }
}
