// SPDX-License-Identifier: MIT
// Serial-versus-OpenMP comparison for the three hot kernels. The serial
// reference paths are the same code the tests pin down; identical results
// with different wall times is the expected outcome.
#include <benchmark/benchmark.h>

#include "fadecap/bounds.hpp"
#include "fadecap/channel_sim.hpp"
#include "fadecap/mutual_information.hpp"
#include "fadecap/presets.hpp"

using namespace fadecap;

namespace {

par::Mode mode_of(const benchmark::State& state) {
    return state.range(0) ? par::Mode::openmp : par::Mode::serial;
}

void set_modes(benchmark::internal::Benchmark* b) {
    b->Arg(0)->Arg(1)->ArgName("openmp");
}

void bm_mi_monte_carlo(benchmark::State& state) {
    const par::Mode mode = mode_of(state);
    for (auto _ : state) {
        const MiEstimate est = mi_cm_coherent_mc(120.0, 200000, 7, mode);
        benchmark::DoNotOptimize(est.value);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * 200000);
}
BENCHMARK(bm_mi_monte_carlo)->Apply(set_modes)->Unit(benchmark::kMillisecond);

void bm_synthesis(benchmark::State& state) {
    const par::Mode mode = mode_of(state);
    const Preset* p = find_preset("fig1");
    const BoundInputs in = preset_inputs(*p);
    for (auto _ : state) {
        const auto reals = generate(in.sf, in.grid, 16, 16, 64, 11, {}, mode);
        benchmark::DoNotOptimize(reals.back()(0, 0));
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * 64);
}
BENCHMARK(bm_synthesis)->Apply(set_modes)->Unit(benchmark::kMillisecond);

void bm_sweep_point(benchmark::State& state) {
    const par::Mode mode = mode_of(state);
    const Preset* p = find_preset("fig1");
    const BoundInputs in = preset_inputs(*p);
    SweepConfig cfg;
    cfg.bandwidths = {1e6, 3e6, 1e7, 3e7};
    cfg.mi.mc_samples = 50000;
    cfg.mode = mode;
    for (auto _ : state) {
        const SweepResult res = run_sweep(in, cfg);
        benchmark::DoNotOptimize(res.points.back().l1cf);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(cfg.bandwidths.size()));
}
BENCHMARK(bm_sweep_point)->Apply(set_modes)->Unit(benchmark::kMillisecond);

void bm_circulant_weights(benchmark::State& state) {
    const Preset* p = find_preset("fig1");
    const BoundInputs in = preset_inputs(*p);
    const std::size_t n = std::size_t(state.range(0));
    for (auto _ : state) {
        const auto w = circulant_weights(in, n);
        benchmark::DoNotOptimize(w[0]);
    }
}
BENCHMARK(bm_circulant_weights)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20)
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
