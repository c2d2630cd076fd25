// SPDX-License-Identifier: MIT
#pragma once

#include "fadecap/common.hpp"

namespace fadecap {

/// Rectangular time-frequency signaling lattice: symbol spacing T seconds,
/// subcarrier spacing F hertz. Valid lattices have T*F > 1.
struct Grid {
    double t;
    double f;
    double tf() const { return t * f; }
};

/// Average power P (dimension 1/s after noise normalization) and the
/// peak-to-average ratio kappa >= 1 of the admissible input set.
struct PowerSpec {
    double p;
    double kappa = 1.0;
};

struct GridDesign {
    Grid grid;
    bool nyquist_time;  // T <= 1/(2 nu_max)
    bool nyquist_freq;  // F <= 1/(2 tau_max)
    bool shrunk;        // requested product was cut back to the corner
    double tf;
};

void validate_grid(const Grid& g);
void validate_power(const PowerSpec& p);

/// Matched-ratio lattice for a channel with Doppler half width nu_max and
/// delay half width tau_max: T/F = tau_max/nu_max and T*F = tf_product.
/// If tf_product exceeds 1/(4 nu_max tau_max) the lattice cannot stay below
/// both aliasing limits; it is shrunk to the corner T = 1/(2 nu_max),
/// F = 1/(2 tau_max) and reported as such.
GridDesign design_grid(double nu_max, double tau_max, double tf_product);

/// Reports the aliasing status of a caller-chosen lattice.
GridDesign check_grid(double nu_max, double tau_max, const Grid& g);

} // namespace fadecap
