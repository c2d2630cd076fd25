// SPDX-License-Identifier: MIT
#include <fstream>
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "scenario.hpp"

#include "fadecap/sweep_io.hpp"

namespace fadecap::cli {

namespace {

struct SweepCmd {
    ScenarioOpts scenario;
    std::string output = "-";
    long exact_limit = 512;
    std::size_t fft_cap = std::size_t(1) << 22;
    std::size_t mc_samples = 0;

    void run() {
        Resolved r = resolve_scenario(scenario, true);
        SweepConfig cfg;
        cfg.bandwidths = r.bandwidths;
        cfg.mi = r.mi;
        if (mc_samples > 0) cfg.mi.mc_samples = mc_samples;
        cfg.exact_slot_limit = exact_limit;
        cfg.fft_cap = fft_cap;
        cfg.mode = r.mode;

        const SweepResult result = run_sweep(r.in, cfg);

        auto echo = r.echo;
        echo.emplace_back("sweep.exact_slot_limit", std::to_string(exact_limit));
        echo.emplace_back("mi.mc_samples", std::to_string(cfg.mi.mc_samples));

        if (output == "-") {
            write_sweep_csv(std::cout, result, echo);
        } else {
            std::ofstream f(output);
            if (!f) throw config_error("cannot open '" + output + "' for writing");
            write_sweep_csv(f, result, echo);
            if (!f.good()) throw config_error("write to '" + output + "' failed");
        }
    }
};

} // namespace

void register_sweep(CLI::App& app) {
    auto cmd = std::make_shared<SweepCmd>();
    CLI::App* sub = app.add_subcommand(
        "sweep", "bound-vs-bandwidth sweep, CSV on stdout or --output");
    cmd->scenario.attach(*sub, true);
    sub->add_option("--output", cmd->output, "output file, '-' for stdout");
    sub->add_option("--exact-limit", cmd->exact_limit,
                    "largest slot count for the exact-penalty bound column");
    sub->add_option("--fft-cap", cmd->fft_cap,
                    "largest slot count evaluated with a dense FFT");
    sub->add_option("--mc-samples", cmd->mc_samples, "Monte-Carlo samples per high-SNR point");
    sub->callback([cmd] { cmd->run(); });
}

} // namespace fadecap::cli
