// SPDX-License-Identifier: MIT
#include <cmath>

#include <doctest.h>

#include "fadecap/common.hpp"
#include "fadecap/quadrature.hpp"
#include "fadecap/special.hpp"

using namespace fadecap;

TEST_CASE("sinc") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sinc(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-14));
    CHECK(sinc(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sinc(-0.3) == sinc(0.3));
}

TEST_CASE("log bessel i0") {
    // A&S 9.8: I0(1) = 1.2660658..., I0(5) = 27.239871...
    CHECK(log_bessel_i0(0.0) == 0.0);
    CHECK(log_bessel_i0(1.0) == doctest::Approx(std::log(1.2660658777520084)).epsilon(1e-12));
    CHECK(log_bessel_i0(5.0) == doctest::Approx(std::log(27.23987182360445)).epsilon(1e-12));
    // large argument: I0(x) ~ e^x / sqrt(2 pi x)
    const double x = 700.0;
    const double asym = x - 0.5 * std::log(2.0 * pi * x) + std::log1p(1.0 / (8.0 * x));
    CHECK(log_bessel_i0(x) == doctest::Approx(asym).epsilon(1e-6));
}

TEST_CASE("expected log of a rayleigh channel") {
    // rho = 1: e * E1(1) = 0.596347362323194...
    CHECK(expected_log_rayleigh(1.0) == doctest::Approx(0.59634736232319407).epsilon(1e-12));
    // small rho: E log(1 + rho Z) -> rho
    CHECK(expected_log_rayleigh(1e-8) == doctest::Approx(1e-8).epsilon(1e-4));
    // against direct quadrature at a few SNRs
    for (double rho : {0.1, 2.0, 37.0}) {
        const double q = integrate(
            [&](double z) { return std::exp(-z) * std::log1p(rho * z); }, 0.0, 60.0 + 8 * rho,
            {1e-11, 1e-13, 44});
        CHECK(expected_log_rayleigh(rho) == doctest::Approx(q).epsilon(1e-8));
    }
}

TEST_CASE("sine and cosine integrals") {
    // A&S table values.
    CHECK(sin_integral(1.0) == doctest::Approx(0.9460830703671830).epsilon(1e-12));
    CHECK(sin_integral(10.0) == doctest::Approx(1.6583475942188740).epsilon(1e-12));
    CHECK(sin_integral(-1.0) == doctest::Approx(-0.9460830703671830).epsilon(1e-12));
    CHECK(cos_integral(1.0) == doctest::Approx(0.3374039229009681).epsilon(1e-12));
    CHECK(cos_integral(10.0) == doctest::Approx(-0.0454564330044554).epsilon(1e-9));
    // Si saturates at pi/2
    CHECK(sin_integral(1e6) == doctest::Approx(pi / 2).epsilon(1e-5));
}

TEST_CASE("entire cosine integral complement") {
    // Cin(x) = gamma + log x - Ci(x) = int_0^x (1 - cos t)/t dt
    for (double x : {1e-6, 1e-3, 0.5, 3.0, 40.0}) {
        const double direct = integrate(
            [](double t) { return t < 1e-8 ? t / 2 : (1.0 - std::cos(t)) / t; }, 0.0, x,
            {1e-12, 1e-16, 44});
        CHECK(entire_cin(x) == doctest::Approx(direct).epsilon(1e-9));
    }
    CHECK(entire_cin(0.0) == 0.0);
    CHECK(entire_cin(1e-9) == doctest::Approx(2.5e-19).epsilon(1e-6));
}

TEST_CASE("integral of log1p over a ramp") {
    for (double a : {1e-12, 1e-6, 0.25, 3.0, 1e8}) {
        for (double x : {1e-4, 0.7, 5.0}) {
            const double direct =
                integrate([&](double u) { return std::log1p(a * u); }, 0.0, x, {1e-12, 1e-18, 44});
            CHECK(int_log1p_linear(a, x) == doctest::Approx(direct).epsilon(1e-9));
        }
    }
    CHECK(int_log1p_linear(0.0, 2.0) == 0.0);
}
