// SPDX-License-Identifier: MIT
#pragma once

namespace fadecap {

/// Normalized sinc: sin(pi x) / (pi x), with sinc(0) = 1.
double sinc(double x);

/// log I0(x) for x >= 0 without overflow (I0 is the modified Bessel function).
double log_bessel_i0(double x);

/// E[log(1 + rho * Z)] for Z ~ Exp(1); equals exp(1/rho) E1(1/rho).
/// This is the ergodic coherent capacity of a Rayleigh channel at SNR rho.
double expected_log_rayleigh(double rho);

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sin_integral(double x);

/// Cosine integral Ci(x), x > 0.
double cos_integral(double x);

/// gamma_E + log(x) - Ci(x), stable as x -> 0 (value ~ x^2/4).
double entire_cin(double x);

/// (1 + a x) log(1 + a x) building block: integral of log(1 + a u) du on [0, x].
/// Returns x*(log1p(a*x) - 1) + log1p(a*x)/a for a > 0, with the a -> 0 limit
/// handled by series.
double int_log1p_linear(double a, double x);

} // namespace fadecap
