// SPDX-License-Identifier: MIT
#include "fadecap/profile.hpp"

#include <algorithm>
#include <cmath>

#include "fadecap/quadrature.hpp"
#include "fadecap/special.hpp"

namespace fadecap {

namespace {
void check_half_width(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw config_error("profile: half width must be positive and finite");
    }
}
} // namespace

Profile Profile::flat(double half_width) {
    check_half_width(half_width);
    return Profile(ProfileKind::flat, half_width);
}

Profile Profile::triangular(double half_width) {
    check_half_width(half_width);
    return Profile(ProfileKind::triangular, half_width);
}

Profile Profile::cosine2(double half_width) {
    check_half_width(half_width);
    return Profile(ProfileKind::cosine2, half_width);
}

Profile Profile::table(double half_width, std::vector<double> cell_values) {
    check_half_width(half_width);
    if (cell_values.empty()) throw config_error("profile: table needs at least one cell");
    double mass = 0.0;
    const double w = 2.0 * half_width / static_cast<double>(cell_values.size());
    for (double v : cell_values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw config_error("profile: table cells must be finite and >= 0");
        }
        mass += v * w;
    }
    if (!(mass > 0.0)) throw config_error("profile: table cells must not all be zero");
    for (double& v : cell_values) v /= mass;
    Profile p(ProfileKind::table, half_width);
    p.cells_ = std::move(cell_values);
    return p;
}

double Profile::density(double x) const {
    const double a = half_;
    if (std::fabs(x) > a) return 0.0;
    switch (kind_) {
    case ProfileKind::flat:
        return 0.5 / a;
    case ProfileKind::triangular:
        return (a - std::fabs(x)) / (a * a);
    case ProfileKind::cosine2: {
        const double c = std::cos(0.5 * pi * x / a);
        return c * c / a;
    }
    case ProfileKind::table: {
        const double w = 2.0 * a / static_cast<double>(cells_.size());
        auto idx = static_cast<std::size_t>((x + a) / w);
        if (idx >= cells_.size()) idx = cells_.size() - 1;
        return cells_[idx];
    }
    }
    return 0.0;
}

cplx Profile::fourier(double f) const {
    const double a = half_;
    switch (kind_) {
    case ProfileKind::flat:
        return {sinc(2.0 * a * f), 0.0};
    case ProfileKind::triangular: {
        const double s = sinc(a * f);
        return {s * s, 0.0};
    }
    case ProfileKind::cosine2:
        return {sinc(2.0 * a * f) + 0.5 * (sinc(2.0 * a * f - 1.0) + sinc(2.0 * a * f + 1.0)),
                0.0};
    case ProfileKind::table: {
        const double w = 2.0 * a / static_cast<double>(cells_.size());
        const double cell_shape = sinc(w * f);
        cplx acc(0.0, 0.0);
        for (std::size_t c = 0; c < cells_.size(); ++c) {
            const double center = -a + (static_cast<double>(c) + 0.5) * w;
            const double phase = -2.0 * pi * f * center;
            acc += cells_[c] * cplx(std::cos(phase), std::sin(phase));
        }
        return acc * (w * cell_shape);
    }
    }
    return {0.0, 0.0};
}

double Profile::square_integral() const {
    const double a = half_;
    switch (kind_) {
    case ProfileKind::flat:
        return 0.5 / a;
    case ProfileKind::triangular:
        return 2.0 / (3.0 * a);
    case ProfileKind::cosine2:
        return 0.75 / a;
    case ProfileKind::table: {
        const double w = 2.0 * a / static_cast<double>(cells_.size());
        double s = 0.0;
        for (double v : cells_) s += v * v * w;
        return s;
    }
    }
    return 0.0;
}

double Profile::peak_density() const {
    switch (kind_) {
    case ProfileKind::flat:
        return 0.5 / half_;
    case ProfileKind::triangular:
    case ProfileKind::cosine2:
        return 1.0 / half_;
    case ProfileKind::table:
        return *std::max_element(cells_.begin(), cells_.end());
    }
    return 0.0;
}

std::vector<LinPiece> Profile::linear_pieces(int min_pieces) const {
    const double a = half_;
    std::vector<LinPiece> out;
    switch (kind_) {
    case ProfileKind::flat:
        out.push_back({-a, a, 0.5 / a, 0.0});
        break;
    case ProfileKind::triangular:
        out.push_back({-a, 0.0, 1.0 / a, 1.0 / (a * a)});
        out.push_back({0.0, a, 1.0 / a, -1.0 / (a * a)});
        break;
    case ProfileKind::table: {
        const double w = 2.0 * a / static_cast<double>(cells_.size());
        for (std::size_t c = 0; c < cells_.size(); ++c) {
            const double lo = -a + static_cast<double>(c) * w;
            out.push_back({lo, lo + w, cells_[c], 0.0});
        }
        break;
    }
    case ProfileKind::cosine2: {
        const int n = std::max(min_pieces, 256);
        double x0 = -a;
        double p0 = density(x0);
        for (int i = 1; i <= n; ++i) {
            const double x1 = -a + 2.0 * a * static_cast<double>(i) / n;
            const double p1 = density(std::min(x1, a));
            const double beta = (p1 - p0) / (x1 - x0);
            out.push_back({x0, x1, p0 - beta * x0, beta});
            x0 = x1;
            p0 = p1;
        }
        break;
    }
    }
    return out;
}

double Profile::log_moment(double amp) const {
    if (amp < 0.0) throw std::invalid_argument("profile log_moment: amp must be >= 0");
    if (amp == 0.0) return 0.0;
    const double a = half_;
    switch (kind_) {
    case ProfileKind::flat:
        return 2.0 * a * std::log1p(amp * 0.5 / a);
    case ProfileKind::triangular:
        return 2.0 * int_log1p_linear(amp / (a * a), a);
    case ProfileKind::cosine2:
        return 2.0 * integrate([&](double x) { return std::log1p(amp * density(x)); }, 0.0, a,
                               {1e-11, 0.0, 44});
    case ProfileKind::table: {
        const double w = 2.0 * a / static_cast<double>(cells_.size());
        double s = 0.0;
        for (double v : cells_) s += w * std::log1p(amp * v);
        return s;
    }
    }
    return 0.0;
}

} // namespace fadecap
