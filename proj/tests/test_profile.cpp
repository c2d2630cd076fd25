// SPDX-License-Identifier: MIT
#include <cmath>

#include <doctest.h>

#include "fadecap/profile.hpp"
#include "fadecap/quadrature.hpp"
#include "fadecap/rng.hpp"
#include "fadecap/special.hpp"

using namespace fadecap;

namespace {

double mass_of(const Profile& p) {
    return integrate([&](double x) { return p.density(x); }, -p.half_width(), p.half_width(),
                     {1e-11, 1e-14, 44});
}

Profile random_table(int cells, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<double> v(static_cast<size_t>(cells), 0.0);
    for (int i = 0; i < cells; ++i) v[size_t(i)] = rng.uniform(std::uint64_t(i));
    return Profile::table(0.35, std::move(v));
}

} // namespace

TEST_CASE("profiles have unit mass") {
    for (const Profile& p : {Profile::flat(2.0), Profile::triangular(0.5),
                             Profile::cosine2(1.3), random_table(7, 11)}) {
        CHECK(mass_of(p) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(p.density(p.half_width() * 1.0001) == 0.0);
        CHECK(p.density(-p.half_width() * 1.0001) == 0.0);
    }
}

TEST_CASE("flat profile closed forms") {
    const Profile p = Profile::flat(0.25);
    CHECK(p.density(0.1) == doctest::Approx(2.0));
    CHECK(p.square_integral() == doctest::Approx(2.0));
    CHECK(p.peak_density() == doctest::Approx(2.0));
    // transform of a centered box is a sinc
    for (double f : {0.0, 0.5, 2.0, 9.0}) {
        const cplx got = p.fourier(f);
        CHECK(got.real() == doctest::Approx(sinc(2 * 0.25 * f)).epsilon(1e-12));
        CHECK(got.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("triangular profile closed forms") {
    const Profile p = Profile::triangular(1.0);
    CHECK(p.density(0.0) == doctest::Approx(1.0));
    CHECK(p.density(0.5) == doctest::Approx(0.5));
    CHECK(p.square_integral() == doctest::Approx(2.0 / 3.0));
    // transform of a unit triangle is sinc^2
    for (double f : {0.3, 1.0, 4.5}) {
        const cplx got = p.fourier(f);
        CHECK(got.real() == doctest::Approx(sinc(f) * sinc(f)).epsilon(1e-10));
        CHECK(std::abs(got.imag()) < 1e-12);
    }
}

TEST_CASE("fourier transforms match quadrature") {
    for (const Profile& p : {Profile::cosine2(0.8), random_table(5, 3)}) {
        for (double f : {0.0, 0.37, 1.9, 6.0}) {
            const double re = integrate(
                [&](double x) { return p.density(x) * std::cos(2 * pi * f * x); },
                -p.half_width(), p.half_width(), {1e-11, 1e-13, 44});
            const double im = integrate(
                [&](double x) { return -p.density(x) * std::sin(2 * pi * f * x); },
                -p.half_width(), p.half_width(), {1e-11, 1e-13, 44});
            const cplx got = p.fourier(f);
            CHECK(got.real() == doctest::Approx(re).epsilon(1e-8));
            CHECK(got.imag() == doctest::Approx(im).epsilon(1e-8));
        }
    }
}

TEST_CASE("square integrals match quadrature") {
    for (const Profile& p : {Profile::triangular(0.4), Profile::cosine2(1.1),
                             random_table(9, 17)}) {
        const double direct = integrate([&](double x) { return p.density(x) * p.density(x); },
                                        -p.half_width(), p.half_width(), {1e-10, 1e-13, 44});
        CHECK(p.square_integral() == doctest::Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("log moment matches quadrature") {
    for (const Profile& p : {Profile::flat(0.5), Profile::triangular(2.0), Profile::cosine2(0.9),
                             random_table(6, 29)}) {
        for (double a : {1e-9, 0.5, 100.0, 1e7}) {
            const double direct =
                integrate([&](double x) { return std::log1p(a * p.density(x)); },
                          -p.half_width(), p.half_width(), {1e-10, 1e-14, 44});
            CHECK(p.log_moment(a) == doctest::Approx(direct).epsilon(1e-7));
        }
        CHECK(p.log_moment(0.0) == 0.0);
    }
}

TEST_CASE("linear pieces tile the support and reproduce the density") {
    for (const Profile& p : {Profile::flat(1.0), Profile::triangular(0.7), random_table(4, 5),
                             Profile::cosine2(0.6)}) {
        const auto pieces = p.linear_pieces(64);
        REQUIRE(!pieces.empty());
        CHECK(pieces.front().lo == doctest::Approx(-p.half_width()));
        CHECK(pieces.back().hi == doctest::Approx(p.half_width()));
        double mass = 0;
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i) CHECK(pieces[i].lo == doctest::Approx(pieces[i - 1].hi));
            mass += pieces[i].mass();
            const double mid = 0.5 * (pieces[i].lo + pieces[i].hi);
            const double val = pieces[i].alpha + pieces[i].beta * mid;
            const double tol = p.kind() == ProfileKind::cosine2 ? 5e-3 : 1e-12;
            CHECK(val == doctest::Approx(p.density(mid)).epsilon(tol));
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("table profile rejects bad input") {
    CHECK_THROWS_AS(Profile::table(1.0, {}), config_error);
    CHECK_THROWS_AS(Profile::table(1.0, {0.0, 0.0}), config_error);
    CHECK_THROWS_AS(Profile::table(1.0, {1.0, -0.5}), config_error);
    CHECK_THROWS_AS(Profile::flat(0.0), config_error);
    CHECK_THROWS_AS(Profile::flat(-1.0), config_error);
}
