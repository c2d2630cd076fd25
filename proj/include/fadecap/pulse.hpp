// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "fadecap/common.hpp"
#include "fadecap/grid.hpp"
#include "fadecap/scattering.hpp"

namespace fadecap {

/// Unit-energy Gaussian prototype g(t) = 2^(1/4) scale^(-1/2) exp(-pi t^2 / scale^2).
/// Root-mean-square duration is scale/(2 sqrt(pi)) and RMS bandwidth
/// 1/(2 sqrt(pi) scale); the duration-bandwidth product meets the Heisenberg
/// floor 1/(4 pi).
struct GaussianPulse {
    double scale;

    double effective_duration() const;
    double effective_bandwidth() const;

    /// Aspect-matched pulse for a lattice: scale^2 = T/F, which equalizes the
    /// ambiguity decay between neighbors at (T, 0) and (0, F).
    static GaussianPulse matched(const Grid& g);
};

/// Time-frequency autocorrelation of g:
///   A(nu, tau) = integral g(t) g(t - tau) exp(-j 2 pi nu t) dt
///              = exp(-j pi nu tau) exp(-pi (tau^2/scale^2 + nu^2 scale^2) / 2).
cplx ambiguity(const GaussianPulse& p, double nu, double tau);

/// Weighted deviation of |A|^2 from 1 over the scattering support:
/// integral of C_H (1 - |A|^2). Vanishes as the spread shrinks.
double eigenfunction_error_e1(const Scattering& sf, const GaussianPulse& p);

/// Weighted deviation of A from 1: integral of C_H |1 - A|^2.
double eigenvalue_error_e2(const Scattering& sf, const GaussianPulse& p);

struct IsiIciResult {
    double value;          // sum over enumerated shells
    double tail_estimate;  // bound on everything beyond the last shell
    int shells;
    std::vector<double> shell_sums; // contribution of each square shell
};

/// Interference leaked onto lattice neighbors: the sum over (n, m) != (0, 0)
/// of integral C_H(nu, tau) exp(-pi ((tau + nT)^2/scale^2 + (nu + mF)^2 scale^2)).
/// Terms are grouped in square shells max(|n|, |m|) = s for s = 1..shells;
/// shell sums are monotone evidence for truncation and a tail bound based on
/// the distance from the lattice point to the scattering support is appended.
IsiIciResult isi_ici_bound_e4(const Scattering& sf, const GaussianPulse& p, const Grid& g,
                              int shells = 5);

struct RatioSweepPoint {
    double ratio; // T/F
    double e4;
};

/// e4 as a function of the lattice aspect ratio at fixed T*F, with the pulse
/// aspect-matched to each lattice. Log-spaced ratios centered on
/// tau_max/nu_max, spanning log_span decades total.
std::vector<RatioSweepPoint> e4_ratio_sweep(const Scattering& sf, double tf_product, int points,
                                            double log_span);

} // namespace fadecap
