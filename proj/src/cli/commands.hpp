// SPDX-License-Identifier: MIT
#pragma once

#include <CLI11.hpp>

namespace fadecap::cli {

void register_sweep(CLI::App& app);
void register_wideband(CLI::App& app);
void register_infbw(CLI::App& app);
void register_pulse_report(CLI::App& app);
void register_simulate(CLI::App& app);
void register_validate(CLI::App& app);

} // namespace fadecap::cli
