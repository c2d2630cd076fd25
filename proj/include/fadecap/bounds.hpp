// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fadecap/grid.hpp"
#include "fadecap/mutual_information.hpp"
#include "fadecap/scattering.hpp"

namespace fadecap {

/// Capacity bounds for a WSSUS channel signaled on a (T, F) lattice, all in
/// nats per second. Bandwidth enters through the number of frequency slots
/// M = floor(B / F); every formula uses the effective bandwidth M * F, and
/// both values are reported.

struct Bandwidth {
    double requested;
    double effective;
    long slots;
};

Bandwidth quantize_bandwidth(const Grid& g, double bandwidth_hz);

struct BoundInputs {
    Scattering sf;
    Grid grid;
    PowerSpec power;
};

/// Coherent-receiver benchmark: (B/TF) E[log(1 + P TF |h|^2 / B)].
double coherent_upper(const BoundInputs& in, const Bandwidth& bw);

/// Penalty psi(B) = (B/kappa) integral of log(1 + kappa P C_H / B).
double penalty_psi(const BoundInputs& in, const Bandwidth& bw);

struct AlphaDiag {
    double psi;
    double alpha;
    bool clipped; // numerically negative optimum floored at 1e-12
};

/// Weighting of the penalty in the peaky upper bound:
/// alpha* = min{1, (B/TF)(1/psi - 1/P)}, floored at 1e-12 with a flag.
double alpha_star(const BoundInputs& in, const Bandwidth& bw, AlphaDiag* diag = nullptr);

/// Sufficient condition for alpha* = 1: spread <= kappa/(3 TF) and
/// P/B below (spread/kappa) (exp(kappa/(2 TF spread)) - 1).
bool alpha_star_condition(const BoundInputs& in, double bandwidth_hz);
double alpha_star_threshold_p_over_b(const BoundInputs& in);

/// Upper bound: (B/TF) log(1 + alpha* P TF / B) - alpha* psi(B).
double upper_u1(const BoundInputs& in, const Bandwidth& bw, AlphaDiag* diag = nullptr);

struct GammaValue {
    double value;
    double gamma;
};

/// Lower bounds. Each maximizes (B/(gamma TF)) I_cm(gamma P TF / B) minus its
/// own penalty over gamma in [1, kappa]; the mutual information term is
/// shared through `MiCache` so the analytic penalty ordering
/// (circulant >= exact >= scattering integral) survives evaluation.
class MiCache {
public:
    MiCache(MiPolicy policy, std::uint64_t point_salt);
    MiValue at(double rho);
    const MiPolicy& policy() const { return policy_; }
    bool used_taylor() const { return used_taylor_; }
    bool used_mc() const { return used_mc_; }

private:
    MiPolicy policy_;
    std::uint64_t salt_;
    std::vector<std::pair<double, MiValue>> cache_;
    bool used_taylor_ = false;
    bool used_mc_ = false;
};

/// Exact-penalty lower bound; frequency slot count is capped (default 512),
/// beyond which config_error directs callers to the circulant form.
GammaValue lower_l1(const BoundInputs& in, const Bandwidth& bw, MiCache& mi,
                    long exact_slot_limit = 512);

/// Circulant-penalty lower bound. The diagonal weights come from one FFT up
/// to fft_cap slots and from a separated kernel evaluation beyond it.
GammaValue lower_l1cf(const BoundInputs& in, const Bandwidth& bw, MiCache& mi,
                      std::size_t fft_cap = std::size_t(1) << 22);

/// Scattering-integral-penalty lower bound (the large-slot-count limit).
GammaValue lower_l1approx(const BoundInputs& in, const Bandwidth& bw, MiCache& mi);

/// Fully closed-form variant: mutual information replaced by its
/// second-order expansion.
GammaValue lower_l1a(const BoundInputs& in, const Bandwidth& bw);

/// Diagonal weights of the frequency-lag circulant of size n: the averaged
/// delay spectrum at the n-th roots of unity. Exposed for validation; the
/// weights are independent of SNR. `fft_cap` selects the route.
std::vector<double> circulant_weights(const BoundInputs& in, std::size_t n,
                                      std::size_t fft_cap = std::size_t(1) << 22);

/// Circulant penalty sum log1p(amp * weight_i) over all n weights without
/// materializing them (separated evaluation for large n).
double circulant_log_sum(const BoundInputs& in, std::size_t n, double amp, std::size_t fft_cap);

struct SweepPoint {
    double bandwidth;
    double effective_bandwidth;
    long slots;
    double ucoh;
    double u1;
    double alpha;
    bool alpha_clipped;
    std::optional<double> l1;
    double l1cf;
    double l1approx;
    double l1a;
    MiMethod mi_method; // dominant method at the optimal gamma of l1cf
};

struct SweepConfig {
    std::vector<double> bandwidths;
    MiPolicy mi;
    long exact_slot_limit = 512;
    std::size_t fft_cap = std::size_t(1) << 22;
    par::Mode mode = par::default_mode();
};

struct SweepResult {
    std::vector<SweepPoint> points;
    bool any_taylor = false;
    bool any_monte_carlo = false;
};

SweepResult run_sweep(const BoundInputs& in, const SweepConfig& cfg);

} // namespace fadecap
