#include <doctest.h>

#include <cmath>

#include "discrimina/errors.hpp"
#include "discrimina/quadrature.hpp"

using namespace discrimina;

TEST_CASE("polynomials are integrated to roundoff") {
    const auto r = integrate_adaptive([](double x) { return x * x * x; }, 0, 1, 1e-12);
    CHECK(std::abs(r.value - 0.25) <= 1e-14);
    CHECK(r.subintervals >= 1);
}

TEST_CASE("smooth and kinked integrands meet the tolerance") {
    const auto e = integrate_adaptive([](double x) { return std::exp(x); }, 0, 1, 1e-12);
    CHECK(std::abs(e.value - (std::exp(1.0) - 1)) <= 1e-12);
    CHECK(e.error <= 1e-12);
    const auto kink = integrate_adaptive([](double x) { return std::max(6.0, 272 * x - 130); }, 0, 1, 1e-12);
    CHECK(std::abs(kink.value - 40.0) <= 1e-10);
    const auto root = integrate_adaptive([](double x) { return std::sqrt(x); }, 0, 1, 1e-10);
    CHECK(std::abs(root.value - 2.0 / 3.0) <= 1e-10);
}

TEST_CASE("invalid tolerances are rejected") {
    CHECK_THROWS(integrate_adaptive([](double x) { return x; }, 0, 1, 0));
    CHECK_THROWS(integrate_adaptive([](double x) { return x; }, 0, 1, -1));
}

TEST_CASE("non-convergence is reported") {
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1 / (x + 1e-9)); }, 0, 1, 1e-14, 50),
                    ConvergenceError);
}
