// SPDX-License-Identifier: MIT
#include "fadecap/wideband.hpp"

#include <cmath>

namespace fadecap {

WidebandSummary wideband_coefficients(const BoundInputs& in) {
    validate_grid(in.grid);
    validate_power(in.power);
    WidebandSummary s;
    s.sigma = in.sf.peakiness();
    const double p = in.power.p;
    const double kappa = in.power.kappa;
    const double tf = in.grid.tf();
    s.peaky_regime = kappa > 2.0 * tf / s.sigma;
    if (s.peaky_regime) {
        s.kappa1 = p * p * (kappa * s.sigma - tf) / 2.0;
    } else {
        const double kps = kappa * p * s.sigma;
        s.kappa1 = kps * kps / (8.0 * tf);
    }
    s.kappa1_lower = kappa * p * p * (s.sigma / 2.0 - tf);
    s.ratio = s.kappa1 > 0.0 ? s.kappa1_lower / s.kappa1 : 0.0;
    return s;
}

InfiniteBandwidth infinite_bandwidth_bounds(const BoundInputs& in, double f_choice) {
    validate_power(in.power);
    InfiniteBandwidth r;
    const double p = in.power.p;
    const double kappa = in.power.kappa;
    r.f_choice = f_choice > 0.0 ? f_choice : 1.0 / (2.0 * in.sf.tau_max());
    r.delay_flat = in.sf.is_delay_flat();
    if (p == 0.0) {
        r.lower = r.upper = r.jensen_gap = 0.0;
        return r;
    }
    r.lower = p - in.sf.doppler_log_moment(kappa * p) / kappa;
    r.upper = p - r.f_choice / kappa * in.sf.log_moment(kappa * p / r.f_choice);
    r.jensen_gap = r.upper - r.lower;
    return r;
}

} // namespace fadecap
