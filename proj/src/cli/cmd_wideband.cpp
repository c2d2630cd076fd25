// SPDX-License-Identifier: MIT
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "scenario.hpp"

#include "fadecap/wideband.hpp"

namespace fadecap::cli {

namespace {

struct WidebandCmd {
    ScenarioOpts scenario;

    void run() {
        Resolved r = resolve_scenario(scenario, false);
        const WidebandSummary w = wideband_coefficients(r.in);
        for (const auto& [k, v] : r.echo) std::cout << "# " << k << " = " << v << "\n";
        std::cout << "sigma = " << fmt_num(w.sigma) << "\n"
                  << "kappa1 = " << fmt_num(w.kappa1) << "\n"
                  << "kappa1_lower = " << fmt_num(w.kappa1_lower) << "\n"
                  << "ratio = " << fmt_num(w.ratio) << "\n"
                  << "regime = " << (w.peaky_regime ? "peaky" : "nonpeaky") << "\n";
    }
};

} // namespace

void register_wideband(CLI::App& app) {
    auto cmd = std::make_shared<WidebandCmd>();
    CLI::App* sub = app.add_subcommand(
        "wideband", "large-bandwidth expansion coefficients of the bounds");
    cmd->scenario.attach(*sub, false);
    sub->callback([cmd] { cmd->run(); });
}

} // namespace fadecap::cli
