// SPDX-License-Identifier: MIT
#include <cstdlib>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"

#include "fadecap/common.hpp"
#include "fadecap/validate.hpp"

namespace fadecap::cli {

namespace {

struct ValidateCmd {
    std::string level = "fast";
    std::uint64_t seed = 1;
    bool serial = false;

    void run() {
        if (level != "fast" && level != "full")
            throw config_error("--level must be fast or full");
        const par::Mode mode = serial ? par::Mode::serial : par::default_mode();
        const ValidationReport report = run_validation(level == "full", seed, mode);
        write_report(std::cout, report);
        if (!report.all_pass()) throw validation_error("validation checks failed");
    }
};

} // namespace

void register_validate(CLI::App& app) {
    auto cmd = std::make_shared<ValidateCmd>();
    CLI::App* sub = app.add_subcommand(
        "validate", "run the built-in invariant checks");
    sub->add_option("--level", cmd->level, "fast | full")
        ->check(CLI::IsMember({"fast", "full"}));
    sub->add_option("--seed", cmd->seed, "seed for the randomized checks");
    sub->add_flag("--serial", cmd->serial, "disable worker threads");
    sub->callback([cmd] { cmd->run(); });
}

} // namespace fadecap::cli
