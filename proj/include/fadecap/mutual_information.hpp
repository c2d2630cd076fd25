// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <cstddef>
#include <string>

#include "fadecap/parallel.hpp"

namespace fadecap {

/// Mutual information per symbol of y = sqrt(rho) x h + w with a
/// unit-modulus uniform-phase input x, Rayleigh gain h ~ CN(0,1) known at the
/// receiver, and w ~ CN(0,1). All values in nats.
///
/// Writing s = rho |h|^2, conditioning on h reduces the channel to a phase
/// ring in noise and
///   I(rho) = E[ 2 s - log I0(2 sqrt(s) |sqrt(s) + w|) ].

struct MiEstimate {
    double value;
    double std_error;
    std::size_t samples;
};

/// Monte Carlo form of the expectation above. Sample indices are mapped to
/// counter-RNG blocks, so the estimate is bit-identical for a fixed
/// (seed, samples) regardless of the worker count.
MiEstimate mi_cm_coherent_mc(double rho, std::size_t samples, std::uint64_t seed,
                             par::Mode mode = par::default_mode());

/// Deterministic evaluation: Gauss-Laguerre over |h|^2, Gauss-Hermite over
/// the two noise quadratures.
double mi_cm_coherent_quad(double rho);

/// Second-order expansion at small rho: rho - rho^2.
double mi_cm_taylor(double rho);

/// Capacity of the same channel with a Gaussian codebook (upper reference):
/// E[log(1 + rho |h|^2)].
double awgn_fading_capacity(double rho);

enum class MiMethod { taylor, quadrature, monte_carlo };

struct MiPolicy {
    double taylor_below = 1e-4;
    double quadrature_below = 50.0;
    std::size_t mc_samples = 1000000;
    std::uint64_t seed = 0x5eedfadec0de01ULL;
    par::Mode mode = par::default_mode();
};

struct MiValue {
    double value;
    double std_error; // 0 for deterministic methods
    MiMethod method;
};

/// Method dispatch by SNR regime per the policy thresholds.
MiValue mi_cm_coherent(double rho, const MiPolicy& policy = {});

const char* mi_method_name(MiMethod m);

/// Stable seed derivation for nested deterministic streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt_a, std::uint64_t salt_b);

} // namespace fadecap
