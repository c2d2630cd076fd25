// SPDX-License-Identifier: MIT
#include <cmath>

#include <doctest.h>

#include "fadecap/mutual_information.hpp"
#include "fadecap/special.hpp"

using namespace fadecap;

TEST_CASE("small snr expansion") {
    CHECK(mi_cm_taylor(1e-3) == doctest::Approx(1e-3 - 1e-6).epsilon(1e-12));
    // quadrature agrees with the expansion where it is valid
    for (double rho : {1e-4, 1e-3}) {
        const double gap = std::abs(mi_cm_coherent_quad(rho) - mi_cm_taylor(rho));
        CHECK(gap < 10 * rho * rho * rho);
    }
}

TEST_CASE("monte carlo agrees with quadrature") {
    for (double rho : {0.5, 1.0, 8.0}) {
        const double exact = mi_cm_coherent_quad(rho);
        const MiEstimate mc = mi_cm_coherent_mc(rho, 300000, 12345);
        CHECK(mc.std_error > 0.0);
        CHECK(std::abs(mc.value - exact) < 4.5 * mc.std_error);
    }
}

TEST_CASE("monte carlo is deterministic and chunk independent") {
    const MiEstimate serial = mi_cm_coherent_mc(2.0, 50000, 777, par::Mode::serial);
    const MiEstimate fancy = mi_cm_coherent_mc(2.0, 50000, 777, par::default_mode());
    CHECK(serial.value == fancy.value);
    CHECK(serial.std_error == fancy.std_error);
    const MiEstimate other_seed = mi_cm_coherent_mc(2.0, 50000, 778);
    CHECK(serial.value != other_seed.value);
}

TEST_CASE("information is between zero and the gaussian reference") {
    for (double rho : {1e-3, 0.1, 1.0, 20.0, 300.0}) {
        const MiValue got = mi_cm_coherent(rho, {});
        CHECK(got.value >= 0.0);
        CHECK(got.value <= awgn_fading_capacity(rho) + 3 * got.std_error + 1e-12);
    }
}

TEST_CASE("monotone in snr") {
    MiPolicy p;
    p.mc_samples = 400000;
    double prev = 0.0;
    for (double rho : {1e-5, 1e-3, 0.05, 0.8, 5.0, 60.0, 400.0}) {
        const MiValue got = mi_cm_coherent(rho, p);
        CHECK(got.value > prev - 3 * got.std_error);
        prev = got.value;
    }
}

TEST_CASE("policy selects methods by snr") {
    MiPolicy p;
    CHECK(mi_cm_coherent(1e-5, p).method == MiMethod::taylor);
    CHECK(mi_cm_coherent(1.0, p).method == MiMethod::quadrature);
    p.mc_samples = 10000;
    CHECK(mi_cm_coherent(100.0, p).method == MiMethod::monte_carlo);
    CHECK(mi_method_name(MiMethod::taylor) == std::string("taylor"));
}

TEST_CASE("gaussian reference closed form") {
    CHECK(awgn_fading_capacity(1.0) == doctest::Approx(expected_log_rayleigh(1.0)).epsilon(1e-13));
}

TEST_CASE("derived seeds differ across salts") {
    const std::uint64_t base = 42;
    CHECK(derive_seed(base, 1, 2) != derive_seed(base, 2, 1));
    CHECK(derive_seed(base, 1, 2) != derive_seed(base, 1, 3));
    CHECK(derive_seed(base, 1, 2) == derive_seed(base, 1, 2));
    CHECK(derive_seed(base + 1, 1, 2) != derive_seed(base, 1, 2));
}
