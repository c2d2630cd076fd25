// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "fadecap/common.hpp"

namespace fadecap {

enum class ProfileKind { flat, triangular, cosine2, table };

/// One linear segment of a density: p(u) = alpha + beta * u on [lo, hi].
struct LinPiece {
    double lo;
    double hi;
    double alpha;
    double beta;
    double mass() const { return (alpha + 0.5 * beta * (lo + hi)) * (hi - lo); }
};

/// Unit-mass power density supported on [-half_width, half_width].
///
/// The analytic kinds are symmetric; the table kind holds uniform cells and
/// may be asymmetric about the origin (the support stays centered).
class Profile {
public:
    static Profile flat(double half_width);
    static Profile triangular(double half_width);
    static Profile cosine2(double half_width);
    /// Cell values are relative weights (>= 0, not all zero); they are
    /// normalized to unit mass over [-half_width, half_width].
    static Profile table(double half_width, std::vector<double> cell_values);

    ProfileKind kind() const { return kind_; }
    double half_width() const { return half_; }

    double density(double x) const;

    /// Fourier transform of the density: integral of p(x) exp(-j 2 pi f x) dx.
    cplx fourier(double f) const;

    /// Integral of p(x)^2 over the support.
    double square_integral() const;

    /// Largest density value on the support.
    double peak_density() const;

    /// Piecewise-linear description of the density. Exact for flat,
    /// triangular and table kinds; a chord interpolation with at least
    /// min_pieces segments otherwise. Pieces tile the support.
    std::vector<LinPiece> linear_pieces(int min_pieces) const;

    /// Integral of log(1 + a * p(x)) dx over the support. Closed form where
    /// the density is piecewise linear, adaptive quadrature otherwise.
    double log_moment(double a) const;

    const std::vector<double>& cells() const { return cells_; }

private:
    Profile(ProfileKind kind, double half_width) : kind_(kind), half_(half_width) {}

    ProfileKind kind_;
    double half_;
    std::vector<double> cells_; // table kind: normalized density per cell
};

} // namespace fadecap
