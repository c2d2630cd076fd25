// SPDX-License-Identifier: MIT
#pragma once

#include "fadecap/bounds.hpp"

namespace fadecap {

/// Infinite-bandwidth and wideband-slope quantities, all in nats per second.

struct WidebandSummary {
    double sigma;        // integral of C_H^2
    double kappa1;       // second-order coefficient of the upper bound
    double kappa1_lower; // second-order coefficient of the lower bound
    bool peaky_regime;   // kappa > 2 TF / sigma
    double ratio;        // kappa1_lower / kappa1
};

/// B * u1(B) -> P - kappa1 / B; the coefficient depends on whether the peak
/// constraint allows the transmit strategy to ride the peakiness of C_H.
WidebandSummary wideband_coefficients(const BoundInputs& in);

struct InfiniteBandwidth {
    double lower;        // P - (1/kappa) int log(1 + kappa P S_H(nu)) dnu
    double upper;        // P - (F/kappa) int int log(1 + kappa P C_H / F)
    double jensen_gap;   // upper - lower
    bool delay_flat;     // structural equality case
    double f_choice;     // subcarrier spacing used in the upper bound
};

/// Capacity limits as B -> infinity. The upper bound is evaluated at
/// f_choice; pass 0 for the minimizing default 1/(2 tau_max).
InfiniteBandwidth infinite_bandwidth_bounds(const BoundInputs& in, double f_choice = 0.0);

} // namespace fadecap
