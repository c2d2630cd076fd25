// SPDX-License-Identifier: MIT
#include <cmath>

#include <doctest.h>

#include "fadecap/pulse.hpp"
#include "fadecap/quadrature.hpp"

using namespace fadecap;

TEST_CASE("unit energy and duration bandwidth product") {
    for (double scale : {0.3, 1.0, 4.0}) {
        const GaussianPulse p{scale};
        const double energy = integrate(
            [&](double t) {
                const double g = std::sqrt(std::sqrt(2.0) / scale) *
                                 std::exp(-pi * t * t / (scale * scale));
                return g * g;
            },
            -8 * scale, 8 * scale, {1e-11, 1e-14, 44});
        CHECK(energy == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(p.effective_duration() * p.effective_bandwidth() ==
              doctest::Approx(1.0 / (4 * pi)).epsilon(1e-12));
    }
}

TEST_CASE("ambiguity closed form against quadrature") {
    const GaussianPulse p{0.7};
    const auto g = [&](double t) {
        return std::sqrt(std::sqrt(2.0) / p.scale) * std::exp(-pi * t * t / (p.scale * p.scale));
    };
    for (auto [nu, tau] : {std::pair{0.0, 0.0}, {0.4, 0.1}, {-1.1, 0.5}, {2.0, -0.8}}) {
        const double re = integrate(
            [&](double t) { return g(t) * g(t - tau) * std::cos(2 * pi * nu * t); }, -6.0, 6.0,
            {1e-11, 1e-14, 44});
        const double im = integrate(
            [&](double t) { return -g(t) * g(t - tau) * std::sin(2 * pi * nu * t); }, -6.0, 6.0,
            {1e-11, 1e-14, 44});
        const cplx got = ambiguity(p, nu, tau);
        CHECK(got.real() == doctest::Approx(re).epsilon(1e-8));
        CHECK(got.imag() == doctest::Approx(im).epsilon(1e-8));
    }
    CHECK(std::abs(ambiguity(p, 0.0, 0.0) - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("matched pulse equalizes lattice neighbors") {
    const Grid g{2.0, 0.625}; // T/F = 3.2
    const GaussianPulse p = GaussianPulse::matched(g);
    CHECK(p.scale * p.scale == doctest::Approx(g.t / g.f).epsilon(1e-12));
    CHECK(std::abs(ambiguity(p, 0.0, g.t)) ==
          doctest::Approx(std::abs(ambiguity(p, g.f, 0.0))).epsilon(1e-12));
}

TEST_CASE("mismatch errors shrink with the spread") {
    // fixed aspect ratio, shrinking area
    double prev_e1 = 1e300, prev_e2 = 1e300;
    for (double s : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const Scattering sf = Scattering::brick(s, s);
        const GaussianPulse p{1.0};
        const double e1 = eigenfunction_error_e1(sf, p);
        const double e2 = eigenvalue_error_e2(sf, p);
        CHECK(e1 >= 0.0);
        CHECK(e2 >= 0.0);
        CHECK(e1 < prev_e1);
        CHECK(e2 < prev_e2);
        prev_e1 = e1;
        prev_e2 = e2;
    }
    CHECK(prev_e1 < 1e-6);
    CHECK(prev_e2 < 1e-6);
}

TEST_CASE("interference shells decay and the tail is small") {
    const Scattering sf = Scattering::brick(0.01, 0.01);
    const Grid g{5.0, 0.25}; // TF = 1.25, matched ratio for this channel
    const GaussianPulse p = GaussianPulse::matched(g);
    const IsiIciResult r = isi_ici_bound_e4(sf, p, g, 4);
    REQUIRE(r.shells == 4);
    CHECK(r.value > 0.0);
    for (int s = 1; s < r.shells; ++s)
        CHECK(r.shell_sums[size_t(s)] < r.shell_sums[size_t(s - 1)]);
    CHECK(r.tail_estimate < 1e-6 * r.value + 1e-300);
    // the first shell carries nearly everything
    CHECK(r.shell_sums[0] > 0.9 * r.value);
}

TEST_CASE("aspect ratio sweep dips at the matched ratio") {
    const Scattering sf = Scattering::brick(2.0, 0.005);
    const auto sweep = e4_ratio_sweep(sf, 1.3, 31, 2.0);
    REQUIRE(sweep.size() == 31);
    size_t best = 0;
    for (size_t i = 1; i < sweep.size(); ++i)
        if (sweep[i].e4 < sweep[best].e4) best = i;
    const double matched = 0.005 / 2.0;
    // log-spaced over 2 decades centered on the matched ratio: the argmin
    // must land within one grid step of the center
    const double step = std::pow(10.0, 2.0 / 30.0);
    CHECK(sweep[best].ratio / matched < step * 1.001);
    CHECK(matched / sweep[best].ratio < step * 1.001);
    // ends are worse than the middle
    CHECK(sweep.front().e4 > sweep[best].e4);
    CHECK(sweep.back().e4 > sweep[best].e4);
}
