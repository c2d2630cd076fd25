// SPDX-License-Identifier: MIT
#pragma once

#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fadecap/bounds.hpp"
#include "fadecap/presets.hpp"
#include "fadecap/sweep_io.hpp"
#include "fadecap/table_io.hpp"

namespace fadecap::cli {

/// Channel/grid/power/sweep settings shared by the subcommands.
///
/// Precedence, lowest to highest: built-in defaults, `--preset`, the
/// `--config` key=value file, explicit command-line flags. The resolved
/// values are echoed so every output is self-describing.

struct ScenarioOpts {
    std::string config_path;
    std::string preset;
    std::string shape = "brick"; // brick | separable | tabulated
    std::string table_path;
    double nu_max = 5.0;
    double tau_max = 5e-7;
    std::string doppler = "flat"; // flat | triangular | cosine2
    std::string delay = "flat";
    double grid_t = 0.0; // both > 0: explicit grid
    double grid_f = 0.0;
    double tf = 1.25; // otherwise: matched design at this TF
    double power = 2.42e7;
    double kappa = 1.0;
    double b_min = 1e5;
    double b_max = 1e12;
    int points = 60;
    std::string spacing = "log"; // log | linear

    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    bool serial = false;

    CLI::Option* o_shape = nullptr;
    CLI::Option* o_table = nullptr;
    CLI::Option* o_nu = nullptr;
    CLI::Option* o_tau = nullptr;
    CLI::Option* o_doppler = nullptr;
    CLI::Option* o_delay = nullptr;
    CLI::Option* o_t = nullptr;
    CLI::Option* o_f = nullptr;
    CLI::Option* o_tf = nullptr;
    CLI::Option* o_power = nullptr;
    CLI::Option* o_kappa = nullptr;
    CLI::Option* o_bmin = nullptr;
    CLI::Option* o_bmax = nullptr;
    CLI::Option* o_points = nullptr;
    CLI::Option* o_spacing = nullptr;
    CLI::Option* o_seed = nullptr;

    void attach(CLI::App& app, bool with_sweep) {
        app.add_option("--config", config_path, "key=value config file (sections in [brackets])");
        app.add_option("--preset", preset, "named scenario: fig1, ieee80211a-like, uwb-like");
        o_shape = app.add_option("--shape", shape, "scattering shape: brick, separable, tabulated");
        o_table = app.add_option("--table", table_path, "tabulated scattering file");
        o_nu = app.add_option("--nu-max", nu_max, "one-sided Doppler spread in Hz");
        o_tau = app.add_option("--tau-max", tau_max, "one-sided delay spread in s");
        o_doppler = app.add_option("--doppler", doppler, "Doppler profile: flat, triangular, cosine2");
        o_delay = app.add_option("--delay", delay, "delay profile: flat, triangular, cosine2");
        o_t = app.add_option("--grid-t", grid_t, "symbol spacing T in s (with --grid-f)");
        o_f = app.add_option("--grid-f", grid_f, "subcarrier spacing F in Hz (with --grid-t)");
        o_tf = app.add_option("--tf", tf, "TF product for the matched grid design");
        o_power = app.add_option("--power", power, "receive SNR density P in 1/s");
        o_kappa = app.add_option("--kappa", kappa, "peak-to-average ratio kappa >= 1");
        if (with_sweep) {
            o_bmin = app.add_option("--b-min", b_min, "smallest bandwidth in Hz");
            o_bmax = app.add_option("--b-max", b_max, "largest bandwidth in Hz");
            o_points = app.add_option("--points", points, "number of sweep points");
            o_spacing = app.add_option("--spacing", spacing, "log or linear");
        }
        o_seed = app.add_option("--seed", seed, "Monte-Carlo seed (also FADECAP_SEED)");
        app.add_option("--workers", workers, "worker count (also FADECAP_WORKERS)");
        app.add_flag("--serial", serial, "single-threaded kernels");
    }

    // config keys and presets fill any slot whose flag was not given
    void apply_overrides() {
        std::map<std::string, std::string> file;
        if (!config_path.empty()) file = load_config_file(config_path);

        if (preset.empty()) {
            const auto it = file.find("scenario.preset");
            if (it != file.end()) preset = it->second;
        }
        if (!preset.empty()) {
            const Preset* p = find_preset(preset);
            if (p == nullptr) throw config_error("unknown preset '" + preset + "'");
            const auto unset = [](const CLI::Option* o) { return o == nullptr || o->count() == 0; };
            if (unset(o_shape)) shape = "brick";
            if (unset(o_nu)) nu_max = p->nu_max;
            if (unset(o_tau)) tau_max = p->tau_max;
            // honour an explicit grid or TF request over the preset's grid
            if (unset(o_t) && unset(o_f) && unset(o_tf)) {
                grid_t = p->grid.t;
                grid_f = p->grid.f;
            }
            if (unset(o_power)) power = p->power.p;
            if (unset(o_kappa)) kappa = p->power.kappa;
            if (unset(o_bmin)) b_min = p->b_min;
            if (unset(o_bmax)) b_max = p->b_max;
            if (unset(o_points)) points = p->points;
            if (unset(o_spacing)) spacing = p->log_spacing ? "log" : "linear";
        }

        auto take = [&](const char* key, auto& slot, const CLI::Option* opt) {
            if (opt != nullptr && opt->count() > 0) return; // flag wins
            const auto it = file.find(key);
            if (it == file.end()) return;
            std::istringstream ss(it->second);
            ss >> slot;
            if (ss.fail() || !ss.eof()) {
                throw config_error(std::string("config key ") + key + ": cannot parse '" +
                                   it->second + "'");
            }
        };
        take("scenario.shape", shape, o_shape);
        take("scenario.table", table_path, o_table);
        take("scenario.nu_max", nu_max, o_nu);
        take("scenario.tau_max", tau_max, o_tau);
        take("scenario.doppler", doppler, o_doppler);
        take("scenario.delay", delay, o_delay);
        take("grid.t", grid_t, o_t);
        take("grid.f", grid_f, o_f);
        take("grid.tf", tf, o_tf);
        take("power.p", power, o_power);
        take("power.kappa", kappa, o_kappa);
        take("sweep.b_min", b_min, o_bmin);
        take("sweep.b_max", b_max, o_bmax);
        take("sweep.points", points, o_points);
        take("sweep.spacing", spacing, o_spacing);
        std::uint64_t file_seed = 0;
        const CLI::Option* no_opt = nullptr;
        take("mi.seed", file_seed, no_opt);
        if (file.count("mi.seed") != 0 && (o_seed == nullptr || o_seed->count() == 0)) {
            seed = file_seed;
            seed_set = true;
        }
        if (o_seed != nullptr && o_seed->count() > 0) seed_set = true;

        // the grid flags are explicit only when both are present
        if ((grid_t > 0.0) != (grid_f > 0.0)) {
            throw config_error("--grid-t and --grid-f must be given together");
        }
    }
};

struct Resolved {
    BoundInputs in;
    GridDesign design;
    std::vector<double> bandwidths;
    MiPolicy mi;
    par::Mode mode;
    std::vector<std::pair<std::string, std::string>> echo;
};

inline Profile make_profile(const std::string& name, double half_width) {
    if (name == "flat") return Profile::flat(half_width);
    if (name == "triangular") return Profile::triangular(half_width);
    if (name == "cosine2") return Profile::cosine2(half_width);
    throw config_error("unknown profile '" + name + "'");
}

inline std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline Scattering make_scattering(const ScenarioOpts& opt) {
    if (opt.shape == "brick") return Scattering::brick(opt.nu_max, opt.tau_max);
    if (opt.shape == "separable") {
        return Scattering::separable(make_profile(opt.doppler, opt.nu_max),
                                     make_profile(opt.delay, opt.tau_max));
    }
    if (opt.shape == "tabulated") {
        if (opt.table_path.empty()) throw config_error("--shape tabulated requires --table");
        return load_scattering_table(opt.table_path);
    }
    throw config_error("unknown shape '" + opt.shape + "'");
}

inline Resolved resolve_scenario(ScenarioOpts& opt, bool with_sweep) {
    opt.apply_overrides();

    if (opt.workers > 0) {
        setenv("FADECAP_WORKERS", std::to_string(opt.workers).c_str(), 1);
    }

    Scattering sf = make_scattering(opt);
    const GridDesign design =
        (opt.grid_t > 0.0 && opt.grid_f > 0.0)
            ? check_grid(sf.nu_max(), sf.tau_max(), {opt.grid_t, opt.grid_f})
            : design_grid(sf.nu_max(), sf.tau_max(), opt.tf);
    Resolved r{{std::move(sf), design.grid, {opt.power, opt.kappa}}, design, {}, {}, {}, {}};
    validate_power(r.in.power);

    if (with_sweep) {
        r.bandwidths =
            bandwidth_grid(opt.b_min, opt.b_max, opt.points, opt.spacing != "linear");
    }

    if (!opt.seed_set) {
        if (const char* env = std::getenv("FADECAP_SEED")) {
            opt.seed = std::strtoull(env, nullptr, 0);
            opt.seed_set = true;
        }
    }
    if (opt.seed_set) r.mi.seed = opt.seed;
    r.mode = opt.serial ? par::Mode::serial : par::default_mode();

    r.echo = {
        {"scenario.preset", opt.preset.empty() ? "(none)" : opt.preset},
        {"scenario.shape", opt.shape},
        {"scenario.nu_max_hz", fmt_num(r.in.sf.nu_max())},
        {"scenario.tau_max_s", fmt_num(r.in.sf.tau_max())},
    };
    if (opt.shape == "separable") {
        r.echo.emplace_back("scenario.doppler", opt.doppler);
        r.echo.emplace_back("scenario.delay", opt.delay);
    }
    if (opt.shape == "tabulated") r.echo.emplace_back("scenario.table", opt.table_path);
    r.echo.emplace_back("grid.t_s", fmt_num(r.in.grid.t));
    r.echo.emplace_back("grid.f_hz", fmt_num(r.in.grid.f));
    r.echo.emplace_back("grid.tf", fmt_num(r.in.grid.tf()));
    r.echo.emplace_back("power.p_per_s", fmt_num(r.in.power.p));
    r.echo.emplace_back("power.kappa", fmt_num(r.in.power.kappa));
    if (with_sweep) {
        r.echo.emplace_back("sweep.b_min_hz", fmt_num(opt.b_min));
        r.echo.emplace_back("sweep.b_max_hz", fmt_num(opt.b_max));
        r.echo.emplace_back("sweep.points", std::to_string(opt.points));
        r.echo.emplace_back("sweep.spacing", opt.spacing);
    }
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "0x%016llx",
                      static_cast<unsigned long long>(r.mi.seed));
        r.echo.emplace_back("mi.seed", buf);
    }
    r.echo.emplace_back("workers", std::to_string(par::worker_count()));
    r.echo.emplace_back("mode", r.mode == par::Mode::serial ? "serial" : "openmp");
    return r;
}

} // namespace fadecap::cli
