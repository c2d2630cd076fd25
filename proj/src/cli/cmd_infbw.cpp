// SPDX-License-Identifier: MIT
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "scenario.hpp"

#include "fadecap/wideband.hpp"

namespace fadecap::cli {

namespace {

struct InfbwCmd {
    ScenarioOpts scenario;
    double f_choice = 0.0;

    void run() {
        Resolved r = resolve_scenario(scenario, false);
        const InfiniteBandwidth b = infinite_bandwidth_bounds(r.in, f_choice);
        for (const auto& [k, v] : r.echo) std::cout << "# " << k << " = " << v << "\n";
        std::cout << "cinf_lb = " << fmt_num(b.lower) << "\n"
                  << "cinf_ub = " << fmt_num(b.upper) << "\n"
                  << "f = " << fmt_num(b.f_choice) << "\n"
                  << "jensen_gap = " << fmt_num(b.jensen_gap) << "\n"
                  << "exact = " << (b.delay_flat ? "yes" : "no") << "\n";
    }
};

} // namespace

void register_infbw(CLI::App& app) {
    auto cmd = std::make_shared<InfbwCmd>();
    CLI::App* sub = app.add_subcommand(
        "infbw", "infinite-bandwidth capacity limits and the Jensen gap");
    cmd->scenario.attach(*sub, false);
    sub->add_option("--f-choice", cmd->f_choice,
                    "subcarrier spacing for the upper bound, 0 = 1/(2 tau_max)");
    sub->callback([cmd] { cmd->run(); });
}

} // namespace fadecap::cli
