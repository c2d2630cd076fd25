// SPDX-License-Identifier: MIT
#include "fadecap/grid.hpp"

#include <cmath>

namespace fadecap {

void validate_grid(const Grid& g) {
    if (!(g.t > 0.0) || !(g.f > 0.0) || !std::isfinite(g.t) || !std::isfinite(g.f)) {
        throw config_error("grid: T and F must be positive and finite");
    }
    if (!(g.t * g.f > 1.0)) {
        throw config_error("grid: T*F must exceed 1 for an orthogonal pulse set");
    }
}

void validate_power(const PowerSpec& p) {
    if (!(p.p >= 0.0) || !std::isfinite(p.p)) {
        throw config_error("power: P must be >= 0 and finite");
    }
    if (!(p.kappa >= 1.0) || !std::isfinite(p.kappa)) {
        throw config_error("power: kappa must be >= 1 and finite");
    }
}

GridDesign design_grid(double nu_max, double tau_max, double tf_product) {
    if (!(nu_max > 0.0) || !(tau_max > 0.0)) {
        throw config_error("design_grid: nu_max and tau_max must be positive");
    }
    if (!(tf_product > 1.0)) {
        throw config_error("design_grid: tf_product must exceed 1");
    }
    const double corner_tf = 1.0 / (4.0 * nu_max * tau_max);
    GridDesign d;
    d.shrunk = tf_product > corner_tf;
    const double tf = d.shrunk ? corner_tf : tf_product;
    d.grid.t = std::sqrt(tf * tau_max / nu_max);
    d.grid.f = std::sqrt(tf * nu_max / tau_max);
    d.tf = d.grid.tf();
    d.nyquist_time = d.grid.t <= 1.0 / (2.0 * nu_max) * (1.0 + 1e-12);
    d.nyquist_freq = d.grid.f <= 1.0 / (2.0 * tau_max) * (1.0 + 1e-12);
    validate_grid(d.grid);
    return d;
}

GridDesign check_grid(double nu_max, double tau_max, const Grid& g) {
    validate_grid(g);
    GridDesign d;
    d.grid = g;
    d.tf = g.tf();
    d.shrunk = false;
    d.nyquist_time = g.t <= 1.0 / (2.0 * nu_max) * (1.0 + 1e-12);
    d.nyquist_freq = g.f <= 1.0 / (2.0 * tau_max) * (1.0 + 1e-12);
    return d;
}

} // namespace fadecap
