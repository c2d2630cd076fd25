// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fadecap/grid.hpp"
#include "fadecap/parallel.hpp"
#include "fadecap/scattering.hpp"

namespace fadecap {

/// Monte-Carlo synthesis of the discretized channel process h[n, m] with
/// E[h[n+dn, m+dm] conj(h[n, m])] equal to the lattice correlation r[dn, dm].
///
/// The generator samples the two-dimensional power spectral density
/// c(theta, phi) = C_H(theta/T, phi/F) / (T F) on an oversampled DFT lattice,
/// weights i.i.d. CN(0,1) draws by sqrt(c), and evaluates the inverse DFT on
/// the requested K x M window. Only lattice cells inside the spectral support
/// are touched, and the weights are renormalized so the lag-(0,0) correlation
/// is exactly 1.

struct SynthOptions {
    int oversample = 4;      // lattice size >= oversample * window size
    int min_band_points = 96; // lattice points across each spectral band
};

class ChannelSynth {
public:
    ChannelSynth(const Scattering& sf, const Grid& g, long k, long f_slots, std::uint64_t seed,
                 const SynthOptions& opt = {});

    /// K x F_slots realization for a given index; index is the RNG stream,
    /// so any subset can be generated in any order on any worker count.
    Eigen::MatrixXcd realization(std::uint64_t index) const;

    long k() const { return k_; }
    long f_slots() const { return f_slots_; }
    long lattice_rows() const { return l1_; }
    long lattice_cols() const { return l2_; }
    std::size_t support_cells() const { return cells_.size(); }

    /// Correlation of the synthesized process itself (the lattice sum); the
    /// discretization bias is the difference from Scattering::lag.
    cplx lattice_lag(long dn, long dm) const;

private:
    struct Cell {
        int u; // position in row phase table
        int v; // position in column phase table
        double amp;
    };

    long k_;
    long f_slots_;
    long l1_;
    long l2_;
    std::uint64_t seed_;
    std::vector<Cell> cells_;
    std::vector<double> theta_; // distinct row frequencies, by table index
    std::vector<double> phi_;   // distinct column frequencies, by table index
};

std::vector<Eigen::MatrixXcd> generate(const Scattering& sf, const Grid& g, long k, long f_slots,
                                       std::size_t count, std::uint64_t seed,
                                       const SynthOptions& opt = {},
                                       par::Mode mode = par::default_mode());

struct LagEstimate {
    cplx value;
    double std_error; // std of per-realization estimates over sqrt(count)
};

/// Average of h[n + dn, m + dm] conj(h[n, m]) over realizations and valid
/// positions; |dn| and |dm| must be inside the window.
LagEstimate empirical_correlation(const std::vector<Eigen::MatrixXcd>& realizations, long dn,
                                  long dm);

/// y = x o h + w with w i.i.d. CN(0,1) drawn from (noise_seed, stream 0).
Eigen::MatrixXcd simulate_io(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& h,
                             std::uint64_t noise_seed);

/// |sum h[n,m] exp(-j 2 pi (n theta - m phi))|^2 / (K M).
double periodogram_point(const Eigen::MatrixXcd& h, double theta, double phi);

/// Exact finite-window expectation of the periodogram: the Fejer-windowed
/// sum of true lattice correlations.
double expected_periodogram(const Scattering& sf, const Grid& g, long k, long f_slots,
                            double theta, double phi);

} // namespace fadecap
