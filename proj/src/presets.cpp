// SPDX-License-Identifier: MIT
#include "fadecap/presets.hpp"

#include <cmath>
#include <cstdio>

namespace fadecap {

namespace {

// kept in sync with preset_checksum(); regenerate with tools/freeze_reference
constexpr std::uint64_t kPinnedChecksum = 0x9b161b3f1782e823ULL;

std::vector<Preset> build_presets() {
    Preset base;
    base.nu_max = 5.0;
    base.tau_max = 5e-7;
    base.grid = {3.5e-4, 3530.0};
    base.power = {2.42e7, 1.0};
    base.b_min = 1e5;
    base.b_max = 1e12;
    base.points = 60;
    base.log_spacing = true;

    Preset fig1 = base;
    fig1.name = "fig1";
    fig1.summary = "brick scattering, spread 1e-5, matched grid, normalized receive SNR 2.42e7/s";

    Preset wlan = base;
    wlan.name = "ieee80211a-like";
    wlan.summary = "same normalized channel as fig1; nameplate: 200 mW TX, 118 dB pathloss, "
                   "5 dB noise figure";

    Preset uwb = base;
    uwb.name = "uwb-like";
    uwb.summary = "same normalized channel as fig1; nameplate: 0.5 mW TX, 77 dB pathloss, "
                  "20 dB noise figure";

    return {fig1, wlan, uwb};
}

void hash_mix(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    h ^= '|';
    h *= 0x100000001b3ULL;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

const Preset* find_preset(const std::string& name) {
    for (const Preset& p : presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

BoundInputs preset_inputs(const Preset& p) {
    return {Scattering::brick(p.nu_max, p.tau_max), p.grid, p.power};
}

std::vector<double> bandwidth_grid(double b_min, double b_max, int points, bool log_spacing) {
    if (!(b_min > 0.0) || !(b_max >= b_min)) {
        throw config_error("bandwidth grid: need 0 < b_min <= b_max");
    }
    if (points < 1) throw config_error("bandwidth grid: points must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.push_back(b_min);
        return out;
    }
    for (int i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / (points - 1);
        out.push_back(log_spacing ? b_min * std::pow(b_max / b_min, s)
                                  : b_min + s * (b_max - b_min));
    }
    return out;
}

std::uint64_t preset_checksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Preset& p : presets()) {
        hash_mix(h, p.name);
        hash_mix(h, p.summary);
        hash_mix(h, num(p.nu_max));
        hash_mix(h, num(p.tau_max));
        hash_mix(h, num(p.grid.t));
        hash_mix(h, num(p.grid.f));
        hash_mix(h, num(p.power.p));
        hash_mix(h, num(p.power.kappa));
        hash_mix(h, num(p.b_min));
        hash_mix(h, num(p.b_max));
        hash_mix(h, num(static_cast<double>(p.points)));
        hash_mix(h, p.log_spacing ? "log" : "linear");
    }
    return h;
}

void verify_presets() {
    const std::uint64_t h = preset_checksum();
    if (h != kPinnedChecksum) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
        throw validation_error(std::string("preset constants do not match the pinned checksum; "
                                           "computed ") +
                               buf);
    }
}

} // namespace fadecap
