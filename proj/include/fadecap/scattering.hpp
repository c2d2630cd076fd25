// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "fadecap/common.hpp"
#include "fadecap/grid.hpp"
#include "fadecap/profile.hpp"

namespace fadecap {

enum class ScatteringShape { brick, separable, tabulated };

/// Scattering function C_H(nu, tau): a unit-volume power density on the
/// rectangle [-nu_max, nu_max] x [-tau_max, tau_max], centered at the origin.
///
/// The separable shape is s(nu) * q(tau) for two unit-mass profiles; brick is
/// the flat special case. The tabulated shape is piecewise constant on a
/// rows x cols cell grid (rows sweep Doppler, columns sweep delay).
class Scattering {
public:
    static Scattering brick(double nu_max, double tau_max);
    static Scattering separable(Profile doppler, Profile delay);
    /// Flat in Doppler, arbitrary delay profile.
    static Scattering doppler_flat(double nu_max, Profile delay);
    /// Arbitrary Doppler profile, flat in delay.
    static Scattering delay_flat(Profile doppler, double tau_max);
    static Scattering tabulated(double nu_max, double tau_max, int rows, int cols,
                                std::vector<double> values);

    ScatteringShape shape() const { return shape_; }
    double nu_max() const { return nu_max_; }
    double tau_max() const { return tau_max_; }

    /// Channel spread: area of the bounding rectangle, 4 * nu_max * tau_max.
    double spread() const { return 4.0 * nu_max_ * tau_max_; }
    bool underspread() const { return spread() < 1.0; }

    double value(double nu, double tau) const;

    /// Integral of C_H^2 (inverse of the effective number of diversity
    /// branches per unit time-bandwidth).
    double peakiness() const;

    double peak_value() const;

    /// Marginals: integral over the other variable.
    double doppler_spectrum(double nu) const;
    double delay_power(double tau) const;

    /// Time-frequency correlation r(dt, df) =
    ///   integral of C_H(nu, tau) exp(+j 2 pi (nu dt - tau df)) dnu dtau.
    cplx correlation(double dt, double df) const;

    /// Lattice lag r[n, m] = correlation(n T, m F).
    cplx lag(const Grid& g, long n, long m) const;

    /// Transform of the delay marginal alone:
    /// integral of delay_power(tau) exp(-j 2 pi f tau) dtau. Equals
    /// correlation(0, f) at a fraction of the cost for tabulated shapes.
    cplx delay_marginal_ft(double f) const;

    /// Delay transform of one Doppler slice:
    /// integral of C_H(nu, tau) exp(-j 2 pi f tau) dtau at fixed nu.
    cplx doppler_slice_delay_ft(double nu, double f) const;

    /// Piecewise-linear description of the delay marginal (see Profile).
    std::vector<LinPiece> delay_marginal_pieces(int min_pieces) const;

    /// Integral of log(1 + amp * C_H(nu, tau)) dnu dtau.
    double log_moment(double amp) const;

    /// Integral of log(1 + amp * S_H(nu)) dnu for the Doppler marginal S_H.
    double doppler_log_moment(double amp) const;

    bool is_separable() const { return shape_ != ScatteringShape::tabulated; }
    bool is_doppler_flat() const;
    bool is_delay_flat() const;

    /// Separable shapes only.
    const Profile& doppler_profile() const;
    const Profile& delay_profile() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<double>& cell_values() const { return cells_; }

private:
    Scattering(ScatteringShape shape, double nu_max, double tau_max, Profile dop, Profile del)
        : shape_(shape), nu_max_(nu_max), tau_max_(tau_max), doppler_(std::move(dop)),
          delay_(std::move(del)) {}

    ScatteringShape shape_;
    double nu_max_;
    double tau_max_;
    Profile doppler_;
    Profile delay_;
    std::vector<double> cells_; // tabulated: row-major density values
    int rows_ = 0;
    int cols_ = 0;
};

} // namespace fadecap
