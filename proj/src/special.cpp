// SPDX-License-Identifier: MIT
#include "fadecap/special.hpp"

#include <cmath>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_expint.h>

#include "fadecap/common.hpp"

namespace fadecap {

namespace {
// GSL must not abort the process; errors are surfaced via return codes.
const int g_gsl_handler_off = [] {
    gsl_set_error_handler_off();
    return 0;
}();
} // namespace

double sinc(double x) {
    const double z = pi * x;
    if (std::fabs(z) < 1e-6) {
        return 1.0 - z * z / 6.0;
    }
    return std::sin(z) / z;
}

double log_bessel_i0(double x) {
    if (x < 0.0) x = -x;
    gsl_sf_result r;
    const int status = gsl_sf_bessel_I0_scaled_e(x, &r);
    if (status != GSL_SUCCESS) {
        throw numeric_error("log_bessel_i0: GSL I0_scaled failed");
    }
    return x + std::log(r.val);
}

double expected_log_rayleigh(double rho) {
    if (rho < 0.0) throw std::invalid_argument("expected_log_rayleigh: rho must be >= 0");
    if (rho == 0.0) return 0.0;
    if (rho < 1e-6) {
        // Asymptotic tail of exp(x) E1(x) at x = 1/rho.
        return rho * (1.0 - rho * (1.0 - 2.0 * rho * (1.0 - 3.0 * rho)));
    }
    gsl_sf_result r;
    const int status = gsl_sf_expint_E1_scaled_e(1.0 / rho, &r);
    if (status != GSL_SUCCESS) {
        throw numeric_error("expected_log_rayleigh: GSL E1_scaled failed");
    }
    return r.val;
}

double sin_integral(double x) {
    gsl_sf_result r;
    const int status = gsl_sf_Si_e(x, &r);
    if (status != GSL_SUCCESS) {
        throw numeric_error("sin_integral: GSL Si failed");
    }
    return r.val;
}

double cos_integral(double x) {
    if (x <= 0.0) throw std::invalid_argument("cos_integral: x must be > 0");
    gsl_sf_result r;
    const int status = gsl_sf_Ci_e(x, &r);
    if (status != GSL_SUCCESS) {
        throw numeric_error("cos_integral: GSL Ci failed");
    }
    return r.val;
}

double entire_cin(double x) {
    x = std::fabs(x);
    if (x == 0.0) return 0.0;
    if (x < 1e-2) {
        const double x2 = x * x;
        return x2 / 4.0 - x2 * x2 / 96.0 + x2 * x2 * x2 / 4320.0;
    }
    constexpr double gamma_e = 0.57721566490153286060651209008240243;
    return gamma_e + std::log(x) - cos_integral(x);
}

double int_log1p_linear(double a, double x) {
    if (a < 0.0) throw std::invalid_argument("int_log1p_linear: a must be >= 0");
    const double ax = a * x;
    if (std::fabs(ax) < 1e-8) {
        // Series limit: x^2 a / 2 - x^3 a^2 / 6 + ...
        return x * ax / 2.0 * (1.0 - ax / 3.0);
    }
    return ((1.0 + ax) * std::log1p(ax) - ax) / a;
}

} // namespace fadecap
