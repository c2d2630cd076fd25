// SPDX-License-Identifier: MIT
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

#include "fadecap/common.hpp"
#include "fadecap/presets.hpp"

int main(int argc, char** argv) {
    CLI::App app{"noncoherent capacity bounds for underspread fading channels"};
    app.set_version_flag("--version", "fadecap 1.0.0");
    app.require_subcommand(1);

    fadecap::cli::register_sweep(app);
    fadecap::cli::register_wideband(app);
    fadecap::cli::register_infbw(app);
    fadecap::cli::register_pulse_report(app);
    fadecap::cli::register_simulate(app);
    fadecap::cli::register_validate(app);

    try {
        fadecap::verify_presets();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const fadecap::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const fadecap::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const fadecap::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
