// SPDX-License-Identifier: MIT
#include <cmath>

#include <doctest.h>

#include "fadecap/common.hpp"
#include "fadecap/quadrature.hpp"

using namespace fadecap;

TEST_CASE("gauss legendre integrates polynomials exactly") {
    for (int n : {2, 5, 16}) {
        const GaussRule r = gauss_legendre(n);
        REQUIRE(int(r.nodes.size()) == n);
        // degree 2n-1 monomial over [-1,1]
        const int d = 2 * n - 2; // even so the integral is nonzero
        double s = 0;
        for (int i = 0; i < n; ++i) s += r.weights[size_t(i)] * std::pow(r.nodes[size_t(i)], d);
        CHECK(s == doctest::Approx(2.0 / (d + 1)).epsilon(1e-13));
        double w = 0;
        for (double wi : r.weights) w += wi;
        CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("gauss hermite moments") {
    const GaussRule r = gauss_hermite(32);
    double m0 = 0, m2 = 0, m4 = 0;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        const double x = r.nodes[i], w = r.weights[i];
        m0 += w;
        m2 += w * x * x;
        m4 += w * x * x * x * x;
    }
    const double spi = std::sqrt(pi);
    CHECK(m0 == doctest::Approx(spi).epsilon(1e-13));
    CHECK(m2 == doctest::Approx(spi / 2).epsilon(1e-13));
    CHECK(m4 == doctest::Approx(3 * spi / 4).epsilon(1e-13));
}

TEST_CASE("gauss laguerre moments") {
    const GaussRule r = gauss_laguerre(24);
    double m0 = 0, m1 = 0, m3 = 0;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        const double x = r.nodes[i], w = r.weights[i];
        m0 += w;
        m1 += w * x;
        m3 += w * x * x * x;
    }
    CHECK(m0 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(m1 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(m3 == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("adaptive integration oracles") {
    CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -1.0, 1.0) ==
          doctest::Approx(pi / 2).epsilon(1e-12));
    // kink inside the interval; ask beyond the default tolerance
    CHECK(integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, {1e-13, 1e-16, 44}) ==
          doctest::Approx(0.3 * 0.3 / 2 + 0.7 * 0.7 / 2).epsilon(1e-11));
    // nearly singular derivative
    CHECK(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(integrate([](double) { return 0.0; }, -3.0, 5.0) == 0.0);
}

TEST_CASE("oscillatory integrand") {
    const double got = integrate([](double x) { return std::sin(40.0 * x); }, 0.0, 2.0);
    CHECK(got == doctest::Approx((1.0 - std::cos(80.0)) / 40.0).epsilon(1e-10));
}

TEST_CASE("2d separable product") {
    const double got = integrate2d([](double x, double y) { return std::exp(-x) * y; }, 0.0, 2.0,
                                   1.0, 3.0);
    CHECK(got == doctest::Approx((1.0 - std::exp(-2.0)) * 4.0).epsilon(1e-9));
}

TEST_CASE("unreachable tolerance raises") {
    QuadOptions opt;
    opt.rel_tol = 1e-15;
    opt.abs_tol = 0.0;
    opt.max_depth = 2;
    CHECK_THROWS_AS(integrate([](double x) { return std::sqrt(std::abs(x - 0.323411)); }, 0.0,
                              1.0, opt),
                    numeric_error);
}
