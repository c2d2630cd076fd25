// SPDX-License-Identifier: MIT
#include "fadecap/channel_sim.hpp"

#include <algorithm>
#include <cmath>

#include "fadecap/rng.hpp"

namespace fadecap {

namespace {

// Overlap fraction of the DFT bin centered at x (width h) with [-band, band].
// A band that fills the whole circle has no boundary bins.
double bin_overlap(double x, double h, double band) {
    if (band >= 0.5 - 1e-12) return 1.0;
    const double lo = std::max(x - 0.5 * h, -band);
    const double hi = std::min(x + 0.5 * h, band);
    return std::clamp((hi - lo) / h, 0.0, 1.0);
}

struct Axis {
    std::vector<int> u;       // DFT bin index
    std::vector<double> freq; // u / L
    std::vector<double> frac; // band overlap of the bin
};

Axis build_axis(long l, double band) {
    Axis ax;
    const double h = 1.0 / static_cast<double>(l);
    for (long u = -l / 2; u < l - l / 2; ++u) {
        const double x = static_cast<double>(u) * h;
        const double f = bin_overlap(x, h, band);
        if (f > 0.0) {
            ax.u.push_back(static_cast<int>(u));
            ax.freq.push_back(x);
            ax.frac.push_back(f);
        }
    }
    return ax;
}

long lattice_size(long window, double band, const SynthOptions& opt) {
    const double width = std::min(1.0, 2.0 * band);
    const double needed = static_cast<double>(opt.min_band_points) / std::max(width, 1e-12);
    long l = std::max<long>(opt.oversample * window, static_cast<long>(std::ceil(needed)));
    l += l % 2;
    if (l > (1L << 26)) {
        throw numeric_error("channel synthesis: spectral band too narrow for this window");
    }
    return l;
}

} // namespace

ChannelSynth::ChannelSynth(const Scattering& sf, const Grid& g, long k, long f_slots,
                           std::uint64_t seed, const SynthOptions& opt)
    : k_(k), f_slots_(f_slots), seed_(seed) {
    if (k < 1 || f_slots < 1) throw config_error("channel synthesis: empty window");
    if (opt.oversample < 4) throw config_error("channel synthesis: oversample must be >= 4");
    const GridDesign d = check_grid(sf.nu_max(), sf.tau_max(), g);
    if (!d.nyquist_time || !d.nyquist_freq) {
        throw config_error("channel synthesis: grid violates the Nyquist bounds "
                           "T <= 1/(2 nu_max), F <= 1/(2 tau_max)");
    }

    const double band_theta = sf.nu_max() * g.t;
    const double band_phi = sf.tau_max() * g.f;
    l1_ = lattice_size(k, band_theta, opt);
    l2_ = lattice_size(f_slots, band_phi, opt);

    const Axis rows = build_axis(l1_, band_theta);
    const Axis cols = build_axis(l2_, band_phi);
    theta_ = rows.freq;
    phi_ = cols.freq;

    const double clamp_t = band_theta * (1.0 - 1e-15);
    const double clamp_f = band_phi * (1.0 - 1e-15);
    double total = 0.0;
    for (std::size_t i = 0; i < rows.freq.size(); ++i) {
        const double nu = std::clamp(rows.freq[i], -clamp_t, clamp_t) / g.t;
        for (std::size_t j = 0; j < cols.freq.size(); ++j) {
            const double tau = std::clamp(cols.freq[j], -clamp_f, clamp_f) / g.f;
            const double c = sf.value(nu, tau);
            if (c <= 0.0) continue;
            const double w = c * rows.frac[i] * cols.frac[j];
            cells_.push_back({static_cast<int>(i), static_cast<int>(j), w});
            total += w;
        }
    }
    if (cells_.empty() || !(total > 0.0)) {
        throw numeric_error("channel synthesis: scattering function vanishes on the lattice");
    }
    if (cells_.size() > 20000000) {
        throw numeric_error("channel synthesis: synthesis lattice too large");
    }
    const double inv = 1.0 / total;
    for (Cell& c : cells_) c.amp = std::sqrt(c.amp * inv);
}

Eigen::MatrixXcd ChannelSynth::realization(std::uint64_t index) const {
    CounterRng rng(seed_, index);
    const auto n_rows = static_cast<Eigen::Index>(theta_.size());
    const auto n_cols = static_cast<Eigen::Index>(phi_.size());

    Eigen::MatrixXcd col_phase(n_cols, f_slots_);
    for (Eigen::Index j = 0; j < n_cols; ++j) {
        for (long m = 0; m < f_slots_; ++m) {
            col_phase(j, m) = std::polar(1.0, -2.0 * pi * static_cast<double>(m) * phi_[j]);
        }
    }

    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n_rows, f_slots_);
    for (std::size_t q = 0; q < cells_.size(); ++q) {
        const Cell& c = cells_[q];
        const cplx xi = rng.cnormal(q) * c.amp;
        g.row(c.u) += xi * col_phase.row(c.v);
    }

    Eigen::MatrixXcd row_phase(k_, n_rows);
    for (long n = 0; n < k_; ++n) {
        for (Eigen::Index i = 0; i < n_rows; ++i) {
            row_phase(n, i) = std::polar(1.0, 2.0 * pi * static_cast<double>(n) * theta_[i]);
        }
    }
    return row_phase * g;
}

cplx ChannelSynth::lattice_lag(long dn, long dm) const {
    cplx acc = 0.0;
    for (const Cell& c : cells_) {
        const double phase = 2.0 * pi * (static_cast<double>(dn) * theta_[static_cast<std::size_t>(c.u)] -
                                         static_cast<double>(dm) * phi_[static_cast<std::size_t>(c.v)]);
        acc += c.amp * c.amp * std::polar(1.0, phase);
    }
    return acc;
}

std::vector<Eigen::MatrixXcd> generate(const Scattering& sf, const Grid& g, long k, long f_slots,
                                       std::size_t count, std::uint64_t seed,
                                       const SynthOptions& opt, par::Mode mode) {
    if (count < 1) throw config_error("channel synthesis: count must be >= 1");
    ChannelSynth synth(sf, g, k, f_slots, seed, opt);
    std::vector<Eigen::MatrixXcd> out(count);
    par::parallel_for(
        count, [&](std::size_t r) { out[r] = synth.realization(r); }, mode);
    return out;
}

LagEstimate empirical_correlation(const std::vector<Eigen::MatrixXcd>& realizations, long dn,
                                  long dm) {
    if (realizations.empty()) throw std::invalid_argument("empirical_correlation: no realizations");
    const long k = realizations.front().rows();
    const long m = realizations.front().cols();
    if (std::labs(dn) >= k || std::labs(dm) >= m) {
        throw std::invalid_argument("empirical_correlation: lag outside the window");
    }
    const long n0 = std::max(0L, -dn);
    const long n1 = k - 1 - std::max(0L, dn);
    const long m0 = std::max(0L, -dm);
    const long m1 = m - 1 - std::max(0L, dm);
    const double norm = static_cast<double>((n1 - n0 + 1) * (m1 - m0 + 1));

    std::vector<cplx> per(realizations.size());
    for (std::size_t r = 0; r < realizations.size(); ++r) {
        const Eigen::MatrixXcd& h = realizations[r];
        cplx acc = 0.0;
        for (long n = n0; n <= n1; ++n) {
            for (long mm = m0; mm <= m1; ++mm) {
                acc += h(n + dn, mm + dm) * std::conj(h(n, mm));
            }
        }
        per[r] = acc / norm;
    }
    cplx mean = 0.0;
    for (const cplx& z : per) mean += z;
    mean /= static_cast<double>(per.size());
    double var = 0.0;
    for (const cplx& z : per) var += std::norm(z - mean);
    const double denom = per.size() > 1 ? static_cast<double>(per.size() - 1) : 1.0;
    var /= denom;
    return {mean, std::sqrt(var / static_cast<double>(per.size()))};
}

Eigen::MatrixXcd simulate_io(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& h,
                             std::uint64_t noise_seed) {
    if (x.rows() != h.rows() || x.cols() != h.cols()) {
        throw config_error("simulate_io: input and channel shapes differ");
    }
    CounterRng rng(noise_seed, 0);
    Eigen::MatrixXcd y = x.cwiseProduct(h);
    const auto cols = static_cast<std::size_t>(h.cols());
    for (Eigen::Index n = 0; n < h.rows(); ++n) {
        for (Eigen::Index m = 0; m < h.cols(); ++m) {
            y(n, m) += rng.cnormal(static_cast<std::size_t>(n) * cols + static_cast<std::size_t>(m));
        }
    }
    return y;
}

double periodogram_point(const Eigen::MatrixXcd& h, double theta, double phi) {
    cplx acc = 0.0;
    for (Eigen::Index n = 0; n < h.rows(); ++n) {
        for (Eigen::Index m = 0; m < h.cols(); ++m) {
            const double phase =
                -2.0 * pi * (static_cast<double>(n) * theta - static_cast<double>(m) * phi);
            acc += h(n, m) * std::polar(1.0, phase);
        }
    }
    return std::norm(acc) / static_cast<double>(h.rows() * h.cols());
}

double expected_periodogram(const Scattering& sf, const Grid& g, long k, long f_slots,
                            double theta, double phi) {
    cplx acc = 0.0;
    for (long dn = -(k - 1); dn <= k - 1; ++dn) {
        for (long dm = -(f_slots - 1); dm <= f_slots - 1; ++dm) {
            const double wn = 1.0 - static_cast<double>(std::labs(dn)) / static_cast<double>(k);
            const double wm =
                1.0 - static_cast<double>(std::labs(dm)) / static_cast<double>(f_slots);
            const double phase =
                -2.0 * pi * (static_cast<double>(dn) * theta - static_cast<double>(dm) * phi);
            acc += wn * wm * sf.lag(g, dn, dm) * std::polar(1.0, phase);
        }
    }
    return acc.real();
}

} // namespace fadecap
