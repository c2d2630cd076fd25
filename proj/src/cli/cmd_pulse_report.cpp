// SPDX-License-Identifier: MIT
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "scenario.hpp"

#include "fadecap/pulse.hpp"

namespace fadecap::cli {

namespace {

struct PulseCmd {
    ScenarioOpts scenario;
    int shells = 5;
    int ratio_points = 0;
    double ratio_span = 2.0;

    void run() {
        Resolved r = resolve_scenario(scenario, false);
        const GaussianPulse p = GaussianPulse::matched(r.in.grid);
        for (const auto& [k, v] : r.echo) std::cout << "# " << k << " = " << v << "\n";
        std::cout << "pulse.scale = " << fmt_num(p.scale) << "\n"
                  << "pulse.effective_duration = " << fmt_num(p.effective_duration()) << "\n"
                  << "pulse.effective_bandwidth = " << fmt_num(p.effective_bandwidth()) << "\n"
                  << "e1 = " << fmt_num(eigenfunction_error_e1(r.in.sf, p)) << "\n"
                  << "e2 = " << fmt_num(eigenvalue_error_e2(r.in.sf, p)) << "\n";
        const IsiIciResult e4 = isi_ici_bound_e4(r.in.sf, p, r.in.grid, shells);
        std::cout << "e4 = " << fmt_num(e4.value) << "\n"
                  << "e4.tail = " << fmt_num(e4.tail_estimate) << "\n";
        for (int s = 0; s < e4.shells; ++s)
            std::cout << "e4.shell_" << (s + 1) << " = " << fmt_num(e4.shell_sums[size_t(s)])
                      << "\n";
        if (ratio_points > 0) {
            const auto sweep =
                e4_ratio_sweep(r.in.sf, r.in.grid.tf(), ratio_points, ratio_span);
            std::cout << "ratio_sweep.points = " << ratio_points << "\n";
            for (const auto& pt : sweep)
                std::cout << "ratio " << fmt_num(pt.ratio) << " e4 " << fmt_num(pt.e4) << "\n";
        }
    }
};

} // namespace

void register_pulse_report(CLI::App& app) {
    auto cmd = std::make_shared<PulseCmd>();
    CLI::App* sub = app.add_subcommand(
        "pulse-report", "prototype-pulse mismatch and interference diagnostics");
    cmd->scenario.attach(*sub, false);
    sub->add_option("--shells", cmd->shells, "interference shells to enumerate");
    sub->add_option("--ratio-points", cmd->ratio_points,
                    "also sweep e4 over the lattice aspect ratio (0 = off)");
    sub->add_option("--ratio-span", cmd->ratio_span, "decades covered by the ratio sweep");
    sub->callback([cmd] { cmd->run(); });
}

} // namespace fadecap::cli
