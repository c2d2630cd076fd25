// SPDX-License-Identifier: MIT
#include "fadecap/scattering.hpp"

#include <cmath>

#include "fadecap/quadrature.hpp"
#include "fadecap/special.hpp"

namespace fadecap {

namespace {
void check_half_widths(double nu_max, double tau_max) {
    if (!(nu_max > 0.0) || !(tau_max > 0.0) || !std::isfinite(nu_max) || !std::isfinite(tau_max)) {
        throw config_error("scattering: nu_max and tau_max must be positive and finite");
    }
}
} // namespace

Scattering Scattering::brick(double nu_max, double tau_max) {
    check_half_widths(nu_max, tau_max);
    return Scattering(ScatteringShape::brick, nu_max, tau_max, Profile::flat(nu_max),
                      Profile::flat(tau_max));
}

Scattering Scattering::separable(Profile doppler, Profile delay) {
    const double nu_max = doppler.half_width();
    const double tau_max = delay.half_width();
    const bool both_flat =
        doppler.kind() == ProfileKind::flat && delay.kind() == ProfileKind::flat;
    return Scattering(both_flat ? ScatteringShape::brick : ScatteringShape::separable, nu_max,
                      tau_max, std::move(doppler), std::move(delay));
}

Scattering Scattering::doppler_flat(double nu_max, Profile delay) {
    return separable(Profile::flat(nu_max), std::move(delay));
}

Scattering Scattering::delay_flat(Profile doppler, double tau_max) {
    return separable(std::move(doppler), Profile::flat(tau_max));
}

Scattering Scattering::tabulated(double nu_max, double tau_max, int rows, int cols,
                                 std::vector<double> values) {
    check_half_widths(nu_max, tau_max);
    if (rows < 1 || cols < 1) throw config_error("scattering: table needs rows, cols >= 1");
    if (values.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw config_error("scattering: table value count does not match rows*cols");
    }
    const double w_nu = 2.0 * nu_max / rows;
    const double w_tau = 2.0 * tau_max / cols;
    double mass = 0.0;
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw config_error("scattering: table cells must be finite and >= 0");
        }
        mass += v * w_nu * w_tau;
    }
    if (!(mass > 0.0)) throw config_error("scattering: table cells must not all be zero");
    for (double& v : values) v /= mass;
    Scattering sf(ScatteringShape::tabulated, nu_max, tau_max, Profile::flat(nu_max),
                  Profile::flat(tau_max));
    sf.cells_ = std::move(values);
    sf.rows_ = rows;
    sf.cols_ = cols;
    return sf;
}

double Scattering::value(double nu, double tau) const {
    if (std::fabs(nu) > nu_max_ || std::fabs(tau) > tau_max_) return 0.0;
    if (shape_ != ScatteringShape::tabulated) {
        return doppler_.density(nu) * delay_.density(tau);
    }
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    auto r = static_cast<std::size_t>((nu + nu_max_) / w_nu);
    auto c = static_cast<std::size_t>((tau + tau_max_) / w_tau);
    if (r >= static_cast<std::size_t>(rows_)) r = rows_ - 1;
    if (c >= static_cast<std::size_t>(cols_)) c = cols_ - 1;
    return cells_[r * cols_ + c];
}

double Scattering::peakiness() const {
    if (shape_ != ScatteringShape::tabulated) {
        return doppler_.square_integral() * delay_.square_integral();
    }
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    double s = 0.0;
    for (double v : cells_) s += v * v;
    return s * w_nu * w_tau;
}

double Scattering::peak_value() const {
    if (shape_ != ScatteringShape::tabulated) {
        return doppler_.peak_density() * delay_.peak_density();
    }
    double m = 0.0;
    for (double v : cells_) m = std::max(m, v);
    return m;
}

double Scattering::doppler_spectrum(double nu) const {
    if (std::fabs(nu) > nu_max_) return 0.0;
    if (shape_ != ScatteringShape::tabulated) return doppler_.density(nu);
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    auto r = static_cast<std::size_t>((nu + nu_max_) / w_nu);
    if (r >= static_cast<std::size_t>(rows_)) r = rows_ - 1;
    double s = 0.0;
    for (int c = 0; c < cols_; ++c) s += cells_[r * cols_ + c];
    return s * w_tau;
}

double Scattering::delay_power(double tau) const {
    if (std::fabs(tau) > tau_max_) return 0.0;
    if (shape_ != ScatteringShape::tabulated) return delay_.density(tau);
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    auto c = static_cast<std::size_t>((tau + tau_max_) / w_tau);
    if (c >= static_cast<std::size_t>(cols_)) c = cols_ - 1;
    double s = 0.0;
    for (int r = 0; r < rows_; ++r) s += cells_[r * cols_ + c];
    return s * w_nu;
}

cplx Scattering::correlation(double dt, double df) const {
    if (shape_ != ScatteringShape::tabulated) {
        // exp(+j 2 pi nu dt) against the Doppler profile is the conjugate of
        // its forward transform; the delay axis enters with the forward sign.
        return std::conj(doppler_.fourier(dt)) * delay_.fourier(df);
    }
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    const double cell_gain = w_nu * w_tau * sinc(w_nu * dt) * sinc(w_tau * df);
    cplx acc(0.0, 0.0);
    for (int r = 0; r < rows_; ++r) {
        const double nu_c = -nu_max_ + (r + 0.5) * w_nu;
        const double ph_r = 2.0 * pi * nu_c * dt;
        cplx row(0.0, 0.0);
        for (int c = 0; c < cols_; ++c) {
            const double tau_c = -tau_max_ + (c + 0.5) * w_tau;
            const double ph = -2.0 * pi * tau_c * df;
            row += cells_[r * cols_ + c] * cplx(std::cos(ph), std::sin(ph));
        }
        acc += row * cplx(std::cos(ph_r), std::sin(ph_r));
    }
    return acc * cell_gain;
}

cplx Scattering::lag(const Grid& g, long n, long m) const {
    return correlation(static_cast<double>(n) * g.t, static_cast<double>(m) * g.f);
}

cplx Scattering::delay_marginal_ft(double f) const {
    if (shape_ != ScatteringShape::tabulated) return delay_.fourier(f);
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    const double cell_shape = sinc(w_tau * f);
    cplx acc(0.0, 0.0);
    for (int c = 0; c < cols_; ++c) {
        double col = 0.0;
        for (int r = 0; r < rows_; ++r) col += cells_[r * cols_ + c];
        const double tau_c = -tau_max_ + (c + 0.5) * w_tau;
        const double ph = -2.0 * pi * tau_c * f;
        acc += col * cplx(std::cos(ph), std::sin(ph));
    }
    return acc * (w_nu * w_tau * cell_shape);
}

cplx Scattering::doppler_slice_delay_ft(double nu, double f) const {
    if (std::fabs(nu) > nu_max_) return {0.0, 0.0};
    if (shape_ != ScatteringShape::tabulated) {
        return doppler_.density(nu) * delay_.fourier(f);
    }
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    auto r = static_cast<std::size_t>((nu + nu_max_) / w_nu);
    if (r >= static_cast<std::size_t>(rows_)) r = rows_ - 1;
    const double cell_shape = sinc(w_tau * f);
    cplx acc(0.0, 0.0);
    for (int c = 0; c < cols_; ++c) {
        const double tau_c = -tau_max_ + (c + 0.5) * w_tau;
        const double ph = -2.0 * pi * tau_c * f;
        acc += cells_[r * cols_ + c] * cplx(std::cos(ph), std::sin(ph));
    }
    return acc * (w_tau * cell_shape);
}

std::vector<LinPiece> Scattering::delay_marginal_pieces(int min_pieces) const {
    if (shape_ != ScatteringShape::tabulated) return delay_.linear_pieces(min_pieces);
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    std::vector<LinPiece> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) {
        double col = 0.0;
        for (int r = 0; r < rows_; ++r) col += cells_[r * cols_ + c];
        const double lo = -tau_max_ + c * w_tau;
        out.push_back({lo, lo + w_tau, col * w_nu, 0.0});
    }
    return out;
}

double Scattering::log_moment(double amp) const {
    if (amp < 0.0) throw std::invalid_argument("scattering log_moment: amp must be >= 0");
    if (amp == 0.0) return 0.0;
    switch (shape_) {
    case ScatteringShape::brick: {
        const double area = 4.0 * nu_max_ * tau_max_;
        return area * std::log1p(amp / area);
    }
    case ScatteringShape::separable: {
        if (doppler_.kind() == ProfileKind::flat) {
            const double h = 2.0 * nu_max_;
            return h * delay_.log_moment(amp / h);
        }
        if (delay_.kind() == ProfileKind::flat) {
            const double h = 2.0 * tau_max_;
            return h * doppler_.log_moment(amp / h);
        }
        return integrate2d(
            [&](double nu, double tau) {
                return std::log1p(amp * doppler_.density(nu) * delay_.density(tau));
            },
            -nu_max_, nu_max_, -tau_max_, tau_max_, {1e-9, 0.0, 44});
    }
    case ScatteringShape::tabulated: {
        const double w_nu = 2.0 * nu_max_ / rows_;
        const double w_tau = 2.0 * tau_max_ / cols_;
        double s = 0.0;
        for (double v : cells_) s += std::log1p(amp * v);
        return s * w_nu * w_tau;
    }
    }
    return 0.0;
}

double Scattering::doppler_log_moment(double amp) const {
    if (amp < 0.0) throw std::invalid_argument("scattering doppler_log_moment: amp must be >= 0");
    if (amp == 0.0) return 0.0;
    if (shape_ != ScatteringShape::tabulated) return doppler_.log_moment(amp);
    const double w_nu = 2.0 * nu_max_ / rows_;
    const double w_tau = 2.0 * tau_max_ / cols_;
    double s = 0.0;
    for (int r = 0; r < rows_; ++r) {
        double row = 0.0;
        for (int c = 0; c < cols_; ++c) row += cells_[r * cols_ + c];
        s += w_nu * std::log1p(amp * row * w_tau);
    }
    return s;
}

bool Scattering::is_doppler_flat() const {
    return shape_ != ScatteringShape::tabulated && doppler_.kind() == ProfileKind::flat;
}

bool Scattering::is_delay_flat() const {
    return shape_ != ScatteringShape::tabulated && delay_.kind() == ProfileKind::flat;
}

const Profile& Scattering::doppler_profile() const {
    if (shape_ == ScatteringShape::tabulated) {
        throw std::logic_error("scattering: tabulated shape has no Doppler profile object");
    }
    return doppler_;
}

const Profile& Scattering::delay_profile() const {
    if (shape_ == ScatteringShape::tabulated) {
        throw std::logic_error("scattering: tabulated shape has no delay profile object");
    }
    return delay_;
}

} // namespace fadecap
