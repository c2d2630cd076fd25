// SPDX-License-Identifier: MIT
#include <cmath>
#include <complex>

#include <doctest.h>

#include "fadecap/bounds.hpp"
#include "fadecap/special.hpp"
#include "fadecap/wideband.hpp"

using namespace fadecap;

namespace {

// small-spread brick on a matched lattice; rho stays in quadrature range
BoundInputs toy(double p = 1.0, double kappa = 1.0) {
    const GridDesign d = design_grid(0.01, 0.01, 1.25);
    return {Scattering::brick(0.01, 0.01), d.grid, {p, kappa}};
}

// one preset-sized configuration used for the route cross-checks
BoundInputs wide_channel(double p) {
    return {Scattering::brick(5.0, 5e-7), Grid{3.5e-4, 3530.0}, {p, 1.0}};
}

} // namespace

TEST_CASE("bandwidth quantization") {
    const Grid g{2.0, 0.625};
    const Bandwidth bw = quantize_bandwidth(g, 10.0);
    CHECK(bw.slots == 16);
    CHECK(bw.effective == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(quantize_bandwidth(g, 9.99).slots == 15);
    CHECK(quantize_bandwidth(g, 0.7).slots == 1);
    CHECK_THROWS_AS(quantize_bandwidth(g, 0.6), config_error);
    CHECK_THROWS_AS(quantize_bandwidth(g, -1.0), config_error);
    // integer multiples are never rounded down by float noise
    for (long k : {3L, 7L, 1000L, 283286L})
        CHECK(quantize_bandwidth(g, double(k) * g.f).slots == k);
}

TEST_CASE("coherent benchmark closed form") {
    const BoundInputs in = toy(2.0);
    const Bandwidth bw = quantize_bandwidth(in.grid, 40.0);
    const double rho = in.power.p * in.grid.tf() / bw.effective;
    const double expect = bw.effective / in.grid.tf() * expected_log_rayleigh(rho);
    CHECK(coherent_upper(in, bw) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("penalty is the scattering log moment") {
    const BoundInputs in = toy(3.0, 2.0);
    const Bandwidth bw = quantize_bandwidth(in.grid, 25.0);
    const double expect = bw.effective / in.power.kappa *
                          in.sf.log_moment(in.power.kappa * in.power.p / bw.effective);
    CHECK(penalty_psi(in, bw) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("alpha weighting") {
    const BoundInputs in = toy(1.0);
    // compact scattering: the peak constraint binds and alpha stays at 1
    AlphaDiag diag{};
    const double a = alpha_star(in, quantize_bandwidth(in.grid, 50.0), &diag);
    CHECK(a == 1.0);
    CHECK(diag.psi > 0.0);
    CHECK(!diag.clipped);
    const double a1b = alpha_star(in, quantize_bandwidth(in.grid, 2e6), nullptr);
    CHECK(a1b == 1.0);
    // strongly dispersive channel: alpha settles below 1, at kappa/(2 TF spread)
    const double s = std::sqrt(0.8) / 2.0; // spread 4 s^2 = 0.8
    const GridDesign d = design_grid(s, s, 1.25);
    const BoundInputs wide = {Scattering::brick(s, s), d.grid, {1.0, 1.0}};
    const double a2 = alpha_star(wide, quantize_bandwidth(wide.grid, 2e6), nullptr);
    CHECK(a2 < 1.0);
    CHECK(a2 == doctest::Approx(1.0 / (2.0 * 1.25 * 0.8)).epsilon(1e-3));
}

TEST_CASE("alpha condition switches at the stated threshold") {
    // spread 1e-2 keeps expm1(kappa / (2 TF spread)) inside double range
    const GridDesign d = design_grid(0.05, 0.05, 1.25);
    const BoundInputs in = {Scattering::brick(0.05, 0.05), d.grid, {1.0, 1.0}};
    const double th = alpha_star_threshold_p_over_b(in);
    REQUIRE(th > 0.0);
    CHECK(std::isfinite(th));
    CHECK(alpha_star_condition(in, in.power.p / (th * 0.999)));
    CHECK(!alpha_star_condition(in, in.power.p / (th * 1.001)));
    // spread gate: a channel too dispersive for the lattice fails outright
    const double s = std::sqrt(0.5) / 2.0; // spread 0.5 > kappa / (3 TF)
    const GridDesign bd = design_grid(s, s, 1.25);
    const BoundInputs bad = {Scattering::brick(s, s), bd.grid, {1.0, 1.0}};
    CHECK(alpha_star_threshold_p_over_b(bad) == 0.0);
    CHECK(!alpha_star_condition(bad, 1.0));
}

TEST_CASE("upper bound is below the log form and above the lower bounds") {
    const BoundInputs in = toy(1.0, 2.0);
    MiCache mi({}, 0);
    for (double b : {10.0, 100.0, 1000.0}) {
        const Bandwidth bw = quantize_bandwidth(in.grid, b);
        AlphaDiag diag{};
        const double u = upper_u1(in, bw, &diag);
        const double cap = bw.effective / in.grid.tf() *
                           std::log1p(diag.alpha * in.power.p * in.grid.tf() / bw.effective);
        CHECK(u <= cap);
        const double cf = lower_l1cf(in, bw, mi).value;
        const double ap = lower_l1approx(in, bw, mi).value;
        const double a = lower_l1a(in, bw).value;
        CHECK(u >= cf - 1e-9 * std::abs(u));
        CHECK(cf <= ap + 1e-9 * std::abs(ap) + 1e-12);
        CHECK(a <= ap + 1e-9 * std::abs(ap) + 1e-12);
        if (bw.slots <= 512) {
            const double ex = lower_l1(in, bw, mi).value;
            CHECK(cf <= ex + 1e-9 * std::abs(ex) + 1e-12);
            CHECK(ex <= ap + 1e-9 * std::abs(ap) + 1e-12);
        }
    }
}

TEST_CASE("exact penalty refuses oversized problems") {
    const BoundInputs in = toy();
    MiCache mi({}, 0);
    const Bandwidth bw = quantize_bandwidth(in.grid, 2000.0);
    REQUIRE(bw.slots > 512);
    CHECK_THROWS_AS(lower_l1(in, bw, mi, 512), config_error);
    CHECK_NOTHROW(lower_l1(in, bw, mi, bw.slots));
}

TEST_CASE("gamma search respects the peak constraint range") {
    const BoundInputs in = toy(1.0, 4.0);
    MiCache mi({}, 1);
    const Bandwidth bw = quantize_bandwidth(in.grid, 100.0);
    for (const GammaValue& gv :
         {lower_l1cf(in, bw, mi), lower_l1approx(in, bw, mi), lower_l1a(in, bw)}) {
        CHECK(gv.gamma >= 1.0 - 1e-12);
        CHECK(gv.gamma <= 4.0 + 1e-12);
    }
    // kappa = 1 pins gamma
    const BoundInputs pinned = toy(1.0, 1.0);
    MiCache mi2({}, 2);
    CHECK(lower_l1cf(pinned, bw, mi2).gamma == 1.0);
}

TEST_CASE("maximized value beats fixed gamma endpoints") {
    const BoundInputs in = toy(2.0, 8.0);
    MiCache mi({}, 3);
    const Bandwidth bw = quantize_bandwidth(in.grid, 64.0);
    const GammaValue best = lower_l1approx(in, bw, mi);
    // evaluating the same objective at gamma = 1 and gamma = kappa by hand
    for (double gamma : {1.0, 8.0}) {
        const double rho = gamma * in.power.p * in.grid.tf() / bw.effective;
        const double mi_term =
            bw.effective / (gamma * in.grid.tf()) * mi.at(rho).value;
        const double pen = bw.effective / gamma *
                           in.sf.log_moment(gamma * in.power.p / bw.effective);
        CHECK(best.value >= mi_term - pen - 1e-9 * std::abs(best.value) - 1e-12);
    }
}

TEST_CASE("circulant weights against a direct fejer sum") {
    const BoundInputs in = wide_channel(1.0);
    const std::size_t n = 1024;
    const auto weights = circulant_weights(in, n);
    REQUIRE(weights.size() == n);
    double sum = 0;
    for (std::size_t i : {std::size_t(0), std::size_t(1), std::size_t(17), std::size_t(511),
                          std::size_t(1023)}) {
        cplx s = 1.0; // m = 0 term
        for (long m = 1; m < long(n); ++m) {
            const cplx r = in.sf.delay_marginal_ft(double(m) * in.grid.f);
            const double w = 1.0 - double(m) / double(n);
            const cplx ph = std::exp(cplx(0, -2.0 * pi * double(m) * double(i) / double(n)));
            s += w * (r * ph + std::conj(r * ph));
        }
        CHECK(weights[i] == doctest::Approx(std::max(0.0, s.real())).epsilon(1e-9));
    }
    for (double w : weights) {
        CHECK(w >= 0.0);
        sum += w;
    }
    // total weight equals n times the lag-0 correlation
    CHECK(sum == doctest::Approx(double(n)).epsilon(1e-9));
}

TEST_CASE("fft and separated kernel routes agree") {
    const BoundInputs in = wide_channel(2.42e7);
    const Bandwidth bw = quantize_bandwidth(in.grid, 1e9);
    const std::size_t n = std::size_t(bw.slots);
    const double amp = in.power.p * in.grid.f / (2.0 * in.sf.nu_max() * bw.effective);
    const double via_fft = circulant_log_sum(in, n, amp, std::size_t(1) << 22);
    const double via_kernel = circulant_log_sum(in, n, amp, 1);
    CHECK(via_kernel == doctest::Approx(via_fft).epsilon(1e-6));
}

TEST_CASE("circulant bound is route independent") {
    const BoundInputs in = wide_channel(2.42e7);
    MiCache mi_a({}, 7);
    MiCache mi_b({}, 7);
    const Bandwidth bw = quantize_bandwidth(in.grid, 1e9);
    const GammaValue a = lower_l1cf(in, bw, mi_a, std::size_t(1) << 22);
    const GammaValue b = lower_l1cf(in, bw, mi_b, 1);
    CHECK(b.value == doctest::Approx(a.value).epsilon(1e-6));
}

TEST_CASE("large bandwidth tails match the expansion coefficients") {
    const BoundInputs in = toy(1.0, 1.0);
    const WidebandSummary w = wideband_coefficients(in);
    CHECK(w.peaky_regime);
    MiCache mi({}, 5);
    double prev_u = 1e300, prev_l = 1e300;
    for (double b : {1e6, 1e7, 1e8}) {
        const Bandwidth bw = quantize_bandwidth(in.grid, b);
        const double u_err = std::abs(upper_u1(in, bw) * bw.effective / w.kappa1 - 1.0);
        const double l_err =
            std::abs(lower_l1a(in, bw).value * bw.effective / w.kappa1_lower - 1.0);
        CHECK(u_err < prev_u);
        CHECK(l_err < prev_l);
        prev_u = u_err;
        prev_l = l_err;
    }
    CHECK(prev_u < 0.01);
    CHECK(prev_l < 0.01);
}

TEST_CASE("zero power is zero rate") {
    const BoundInputs in = toy(0.0);
    const Bandwidth bw = quantize_bandwidth(in.grid, 100.0);
    MiCache mi({}, 9);
    CHECK(coherent_upper(in, bw) == 0.0);
    CHECK(upper_u1(in, bw) == 0.0);
    CHECK(lower_l1cf(in, bw, mi).value == 0.0);
    CHECK(lower_l1a(in, bw).value == 0.0);
}

TEST_CASE("mi cache replays values bit for bit") {
    MiPolicy p;
    p.mc_samples = 20000;
    MiCache mi(p, 4);
    const MiValue first = mi.at(120.0); // monte carlo regime
    const MiValue again = mi.at(120.0);
    CHECK(first.value == again.value);
    CHECK(first.method == MiMethod::monte_carlo);
    CHECK(mi.used_mc());
    CHECK(!mi.used_taylor());
    (void)mi.at(1e-6);
    CHECK(mi.used_taylor());

    // a different point salt draws different samples
    MiCache other(p, 5);
    CHECK(other.at(120.0).value != first.value);
}

TEST_CASE("sweep points carry consistent fields") {
    BoundInputs in = toy(1.0, 1.0);
    SweepConfig cfg;
    cfg.bandwidths = {2000.0, 20.0, 200.0}; // deliberately unsorted
    cfg.exact_slot_limit = 512;
    cfg.mi.mc_samples = 20000;
    const SweepResult res = run_sweep(in, cfg);
    REQUIRE(res.points.size() == 3);
    for (size_t i = 1; i < res.points.size(); ++i)
        CHECK(res.points[i].bandwidth > res.points[i - 1].bandwidth);
    for (const SweepPoint& pt : res.points) {
        CHECK(pt.slots == quantize_bandwidth(in.grid, pt.bandwidth).slots);
        CHECK(pt.effective_bandwidth == doctest::Approx(double(pt.slots) * in.grid.f));
        CHECK(pt.l1.has_value() == (pt.slots <= cfg.exact_slot_limit));
        CHECK(pt.u1 >= pt.l1cf - 1e-9 * std::abs(pt.u1));
        CHECK(pt.alpha >= 1e-12);
        CHECK(pt.alpha <= 1.0);
        CHECK(pt.ucoh >= 0.0);
    }
}
