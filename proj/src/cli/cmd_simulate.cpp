// SPDX-License-Identifier: MIT
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "scenario.hpp"

#include "fadecap/channel_sim.hpp"
#include "fadecap/table_io.hpp"

namespace fadecap::cli {

namespace {

struct SimulateCmd {
    ScenarioOpts scenario;
    long k = 16;
    long slots = 16;
    std::size_t count = 1000;
    std::string dump;

    void run() {
        Resolved r = resolve_scenario(scenario, false);
        for (const auto& [key, v] : r.echo) std::cout << "# " << key << " = " << v << "\n";
        std::cout << "# sim.k = " << k << "\n"
                  << "# sim.slots = " << slots << "\n"
                  << "# sim.count = " << count << "\n";

        const ChannelSynth synth(r.in.sf, r.in.grid, k, slots, r.mi.seed);
        std::cout << "# sim.lattice = " << synth.lattice_rows() << "x" << synth.lattice_cols()
                  << "\n"
                  << "# sim.support_cells = " << synth.support_cells() << "\n";

        std::vector<Eigen::MatrixXcd> reals(count);
        parallel_for(count,
                     [&](std::size_t i) { reals[i] = synth.realization(std::uint64_t(i)); },
                     r.mode);

        if (!dump.empty()) {
            std::ofstream f(dump);
            if (!f) throw config_error("cannot open '" + dump + "' for writing");
            for (const auto& h : reals) write_complex_matrix(f, h);
            if (!f.good()) throw config_error("write to '" + dump + "' failed");
            std::cout << "# sim.dump = " << dump << "\n";
        }

        std::cout << "lag,dn,dm,target_re,target_im,est_re,est_im,std_error,sigmas\n";
        const long lag_n = std::min<long>(3, k - 1);
        const long lag_m = std::min<long>(3, slots - 1);
        for (long dn = 0; dn <= lag_n; ++dn) {
            for (long dm = (dn == 0) ? 0 : -lag_m; dm <= lag_m; dm += std::max<long>(1, lag_m)) {
                const cplx target = r.in.sf.lag(r.in.grid, dn, dm);
                const LagEstimate est = empirical_correlation(reals, dn, dm);
                const double dev = std::abs(est.value - target);
                const double sig = est.std_error > 0 ? dev / est.std_error : 0.0;
                std::cout << "lag," << dn << "," << dm << "," << fmt_num(target.real()) << ","
                          << fmt_num(target.imag()) << "," << fmt_num(est.value.real()) << ","
                          << fmt_num(est.value.imag()) << "," << fmt_num(est.std_error) << ","
                          << fmt_num(sig) << "\n";
            }
        }
    }
};

} // namespace

void register_simulate(CLI::App& app) {
    auto cmd = std::make_shared<SimulateCmd>();
    CLI::App* sub = app.add_subcommand(
        "simulate", "draw channel realizations and compare lag statistics");
    cmd->scenario.attach(*sub, false);
    sub->add_option("--k", cmd->k, "time slots per realization");
    sub->add_option("--slots", cmd->slots, "frequency slots per realization");
    sub->add_option("--count", cmd->count, "number of realizations");
    sub->add_option("--dump", cmd->dump, "append every realization to this file");
    sub->callback([cmd] { cmd->run(); });
}

} // namespace fadecap::cli
