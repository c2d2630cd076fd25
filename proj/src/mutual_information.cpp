// SPDX-License-Identifier: MIT
#include "fadecap/mutual_information.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fadecap/common.hpp"
#include "fadecap/quadrature.hpp"
#include "fadecap/rng.hpp"
#include "fadecap/special.hpp"

namespace fadecap {

namespace {

// Streams of the per-sample counter blocks. The phase stream keeps the
// estimator honest about the input distribution even though |y| given h is
// phase invariant.
constexpr std::uint64_t kStreamGain = 0;
constexpr std::uint64_t kStreamNoise = 1;
constexpr std::uint64_t kStreamPhase = 2;

double sample_term(double rho, const CounterRng& gain, const CounterRng& noise,
                   const CounterRng& phase, std::uint64_t i) {
    const std::complex<double> h = gain.cnormal(i);
    const std::complex<double> w = noise.cnormal(i);
    const double u = phase.uniform(i);
    const std::complex<double> x = std::polar(1.0, 2.0 * pi * u);
    const std::complex<double> y = std::sqrt(rho) * x * h + w;
    const double s = rho * std::norm(h);
    return 2.0 * s - log_bessel_i0(2.0 * std::sqrt(s) * std::abs(y));
}

} // namespace

MiEstimate mi_cm_coherent_mc(double rho, std::size_t samples, std::uint64_t seed, par::Mode mode) {
    if (rho < 0.0) throw std::invalid_argument("mi_cm_coherent_mc: rho must be >= 0");
    if (samples == 0) throw std::invalid_argument("mi_cm_coherent_mc: need samples >= 1");
    const CounterRng gain(seed, kStreamGain);
    const CounterRng noise(seed, kStreamNoise);
    const CounterRng phase(seed, kStreamPhase);
    double sum = 0.0;
    double sum_sq = 0.0;
    par::parallel_sum2(
        samples,
        [&](std::size_t i, double& a, double& b) {
            const double t = sample_term(rho, gain, noise, phase, i);
            a = t;
            b = t * t;
        },
        sum, sum_sq, mode);
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    return {mean, std::sqrt(var / n), samples};
}

double mi_cm_coherent_quad(double rho) {
    if (rho < 0.0) throw std::invalid_argument("mi_cm_coherent_quad: rho must be >= 0");
    if (rho == 0.0) return 0.0;
    static const GaussRule lag = gauss_laguerre(128);
    static const GaussRule herm = gauss_hermite(64);
    double outer = 0.0;
    for (std::size_t k = 0; k < lag.nodes.size(); ++k) {
        const double s = rho * lag.nodes[k];
        const double rs = std::sqrt(s);
        double inner = 0.0;
        for (std::size_t i = 0; i < herm.nodes.size(); ++i) {
            // Real noise quadrature: w_re = x_i (h-aligned frame, variance 1/2
            // absorbed by the sqrt(2)/sqrt(2) pairing below).
            const double re = rs + herm.nodes[i];
            double row = 0.0;
            for (std::size_t j = 0; j < herm.nodes.size(); ++j) {
                const double im = herm.nodes[j];
                row += herm.weights[j] * log_bessel_i0(2.0 * rs * std::hypot(re, im));
            }
            inner += herm.weights[i] * row;
        }
        inner /= pi; // normalization of exp(-x^2-y^2) over the plane
        outer += lag.weights[k] * (2.0 * s - inner);
    }
    return outer;
}

double mi_cm_taylor(double rho) { return rho - rho * rho; }

double awgn_fading_capacity(double rho) { return expected_log_rayleigh(rho); }

MiValue mi_cm_coherent(double rho, const MiPolicy& policy) {
    if (rho < 0.0) throw std::invalid_argument("mi_cm_coherent: rho must be >= 0");
    if (rho < policy.taylor_below) {
        return {mi_cm_taylor(rho), 0.0, MiMethod::taylor};
    }
    if (rho <= policy.quadrature_below) {
        return {mi_cm_coherent_quad(rho), 0.0, MiMethod::quadrature};
    }
    const MiEstimate est = mi_cm_coherent_mc(rho, policy.mc_samples, policy.seed, policy.mode);
    return {est.value, est.std_error, MiMethod::monte_carlo};
}

const char* mi_method_name(MiMethod m) {
    switch (m) {
    case MiMethod::taylor:
        return "taylor";
    case MiMethod::quadrature:
        return "quadrature";
    case MiMethod::monte_carlo:
        return "monte_carlo";
    }
    return "unknown";
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt_a, std::uint64_t salt_b) {
    // splitmix64 finalizer over the mixed words
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (salt_a + 1) + 0xBF58476D1CE4E5B9ULL * (salt_b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace fadecap
