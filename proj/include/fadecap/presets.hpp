// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fadecap/bounds.hpp"

namespace fadecap {

/// Shipped scenarios. All three share the same normalized numbers: a brick
/// scattering function with nu_max = 5 Hz and tau_max = 0.5 us
/// (spread 1e-5), the matched grid T = 0.35 ms, F = 3.53 kHz, receive SNR
/// density P = 2.42e7 1/s with kappa = 1, and a 60-point log sweep over
/// 1e5..1e12 Hz. They differ in the nameplate link budget they summarize.

struct Preset {
    std::string name;
    std::string summary;
    double nu_max;
    double tau_max;
    Grid grid;
    PowerSpec power;
    double b_min;
    double b_max;
    int points;
    bool log_spacing;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

BoundInputs preset_inputs(const Preset& p);
std::vector<double> bandwidth_grid(double b_min, double b_max, int points, bool log_spacing);

/// FNV-1a over the canonical serialization of all presets. The pinned value
/// is compared at every CLI startup; a mismatch aborts with a validation
/// error so edited scenario constants cannot masquerade as shipped ones.
std::uint64_t preset_checksum();
void verify_presets();

} // namespace fadecap
