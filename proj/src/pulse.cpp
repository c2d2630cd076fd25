// SPDX-License-Identifier: MIT
#include "fadecap/pulse.hpp"

#include <algorithm>
#include <cmath>

#include "fadecap/quadrature.hpp"

namespace fadecap {

namespace {

// integral of exp(-alpha x^2) over [a, b]
double gauss_integral(double a, double b, double alpha) {
    const double s = std::sqrt(alpha);
    return 0.5 * std::sqrt(pi / alpha) * (std::erf(s * b) - std::erf(s * a));
}

// integral of p(x) exp(-alpha (x + shift)^2) dx over the support of p
double profile_gauss_moment(const Profile& p, double shift, double alpha) {
    const double h = p.half_width();
    switch (p.kind()) {
    case ProfileKind::flat:
        return gauss_integral(shift - h, shift + h, alpha) * (0.5 / h);
    case ProfileKind::table: {
        const auto& cells = p.cells();
        const double w = 2.0 * h / static_cast<double>(cells.size());
        double s = 0.0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const double lo = -h + static_cast<double>(c) * w;
            s += cells[c] * gauss_integral(lo + shift, lo + w + shift, alpha);
        }
        return s;
    }
    default:
        return integrate(
            [&](double x) { return p.density(x) * std::exp(-alpha * (x + shift) * (x + shift)); },
            -h, h, {1e-11, 1e-18, 44});
    }
}

// integral of p(x) * (1 - exp(-alpha x^2)) dx, kept in full relative
// precision for small alpha where 1 - exp is tiny.
double profile_gauss_defect(const Profile& p, double alpha) {
    const double h = p.half_width();
    if (p.kind() == ProfileKind::flat) {
        const double z = std::sqrt(alpha) * h;
        if (z < 0.5) {
            // 1 - sqrt(pi) erf(z)/(2z) = sum_{k>=1} (-1)^(k+1) z^(2k) / (k! (2k+1))
            double sum = 0.0;
            const double zz = z * z;
            double pow = zz;
            double fact = 1.0;
            for (int k = 1; k <= 20; ++k) {
                const double term = pow / (fact * (2.0 * k + 1.0));
                sum += (k % 2 == 1) ? term : -term;
                pow *= zz;
                fact *= static_cast<double>(k + 1);
                if (term < 1e-18 * std::max(sum, 1e-300)) break;
            }
            return sum;
        }
        return 1.0 - std::sqrt(pi / alpha) * std::erf(z) / (2.0 * h);
    }
    return integrate([&](double x) { return p.density(x) * (-std::expm1(-alpha * x * x)); }, -h, h,
                     {1e-11, 1e-20, 44});
}

// 9-point Gauss-Legendre on a rectangle, for per-cell sums of smooth kernels
double cell_quad2(const std::function<double(double, double)>& f, double x0, double x1, double y0,
                  double y1) {
    static const GaussRule g9 = gauss_legendre(9);
    const double hx = 0.5 * (x1 - x0);
    const double cx = 0.5 * (x1 + x0);
    const double hy = 0.5 * (y1 - y0);
    const double cy = 0.5 * (y1 + y0);
    double s = 0.0;
    for (std::size_t i = 0; i < g9.nodes.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < g9.nodes.size(); ++j) {
            row += g9.weights[j] * f(cx + hx * g9.nodes[i], cy + hy * g9.nodes[j]);
        }
        s += g9.weights[i] * row;
    }
    return s * hx * hy;
}

// Applies a smooth kernel k(nu, tau) against the scattering density with the
// right evaluation strategy per shape.
double weighted_kernel(const Scattering& sf, const std::function<double(double, double)>& k) {
    if (sf.shape() == ScatteringShape::tabulated) {
        const double w_nu = 2.0 * sf.nu_max() / sf.rows();
        const double w_tau = 2.0 * sf.tau_max() / sf.cols();
        double s = 0.0;
        for (int r = 0; r < sf.rows(); ++r) {
            const double nu0 = -sf.nu_max() + r * w_nu;
            for (int c = 0; c < sf.cols(); ++c) {
                const double tau0 = -sf.tau_max() + c * w_tau;
                const double v = sf.cell_values()[static_cast<std::size_t>(r) * sf.cols() + c];
                if (v == 0.0) continue;
                s += v * cell_quad2(k, nu0, nu0 + w_nu, tau0, tau0 + w_tau);
            }
        }
        return s;
    }
    return integrate2d(
        [&](double nu, double tau) { return sf.value(nu, tau) * k(nu, tau); }, -sf.nu_max(),
        sf.nu_max(), -sf.tau_max(), sf.tau_max(), {1e-10, 1e-18, 44});
}

} // namespace

double GaussianPulse::effective_duration() const { return scale / (2.0 * std::sqrt(pi)); }

double GaussianPulse::effective_bandwidth() const { return 1.0 / (2.0 * std::sqrt(pi) * scale); }

GaussianPulse GaussianPulse::matched(const Grid& g) {
    validate_grid(g);
    return GaussianPulse{std::sqrt(g.t / g.f)};
}

cplx ambiguity(const GaussianPulse& p, double nu, double tau) {
    if (!(p.scale > 0.0)) throw config_error("pulse: scale must be positive");
    const double d2 = p.scale * p.scale;
    const double mag = std::exp(-0.5 * pi * (tau * tau / d2 + nu * nu * d2));
    const double phase = -pi * nu * tau;
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

double eigenfunction_error_e1(const Scattering& sf, const GaussianPulse& p) {
    if (!(p.scale > 0.0)) throw config_error("pulse: scale must be positive");
    const double d2 = p.scale * p.scale;
    const double a_nu = pi * d2;
    const double a_tau = pi / d2;
    if (sf.shape() != ScatteringShape::tabulated) {
        // 1 - Inu*Itau recast as Env + Etau - Env*Etau with each defect
        // integral evaluated directly (no catastrophic cancellation).
        const double env = profile_gauss_defect(sf.doppler_profile(), a_nu);
        const double eta = profile_gauss_defect(sf.delay_profile(), a_tau);
        return env + eta - env * eta;
    }
    return weighted_kernel(sf, [&](double nu, double tau) {
        return -std::expm1(-(a_nu * nu * nu + a_tau * tau * tau));
    });
}

double eigenvalue_error_e2(const Scattering& sf, const GaussianPulse& p) {
    if (!(p.scale > 0.0)) throw config_error("pulse: scale must be positive");
    return weighted_kernel(sf, [&](double nu, double tau) {
        const cplx a = ambiguity(p, nu, tau);
        return std::norm(cplx(1.0, 0.0) - a);
    });
}

IsiIciResult isi_ici_bound_e4(const Scattering& sf, const GaussianPulse& p, const Grid& g,
                              int shells) {
    if (!(p.scale > 0.0)) throw config_error("pulse: scale must be positive");
    validate_grid(g);
    if (shells < 1) throw std::invalid_argument("isi_ici_bound_e4: shells must be >= 1");

    const double d2 = p.scale * p.scale;
    const double a_nu = pi * d2;
    const double a_tau = pi / d2;

    const bool tab = sf.shape() == ScatteringShape::tabulated;
    const int span = shells;

    // Per-axis factors for every shift that can occur, cached up front.
    // Separable: scalars; tabulated: one factor per cell row/column.
    std::vector<double> fac_m(static_cast<std::size_t>(2 * span + 1));
    std::vector<double> fac_n(static_cast<std::size_t>(2 * span + 1));
    std::vector<std::vector<double>> row_fac, col_fac;
    if (!tab) {
        for (int m = -span; m <= span; ++m) {
            fac_m[static_cast<std::size_t>(m + span)] =
                profile_gauss_moment(sf.doppler_profile(), m * g.f, a_nu);
        }
        for (int n = -span; n <= span; ++n) {
            fac_n[static_cast<std::size_t>(n + span)] =
                profile_gauss_moment(sf.delay_profile(), n * g.t, a_tau);
        }
    } else {
        const double w_nu = 2.0 * sf.nu_max() / sf.rows();
        const double w_tau = 2.0 * sf.tau_max() / sf.cols();
        row_fac.assign(static_cast<std::size_t>(2 * span + 1),
                       std::vector<double>(static_cast<std::size_t>(sf.rows())));
        col_fac.assign(static_cast<std::size_t>(2 * span + 1),
                       std::vector<double>(static_cast<std::size_t>(sf.cols())));
        for (int m = -span; m <= span; ++m) {
            for (int r = 0; r < sf.rows(); ++r) {
                const double lo = -sf.nu_max() + r * w_nu;
                row_fac[static_cast<std::size_t>(m + span)][static_cast<std::size_t>(r)] =
                    gauss_integral(lo + m * g.f, lo + w_nu + m * g.f, a_nu);
            }
        }
        for (int n = -span; n <= span; ++n) {
            for (int c = 0; c < sf.cols(); ++c) {
                const double lo = -sf.tau_max() + c * w_tau;
                col_fac[static_cast<std::size_t>(n + span)][static_cast<std::size_t>(c)] =
                    gauss_integral(lo + n * g.t, lo + w_tau + n * g.t, a_tau);
            }
        }
    }

    auto term = [&](int n, int m) {
        if (!tab) {
            return fac_n[static_cast<std::size_t>(n + span)] * fac_m[static_cast<std::size_t>(m + span)];
        }
        const auto& rf = row_fac[static_cast<std::size_t>(m + span)];
        const auto& cf = col_fac[static_cast<std::size_t>(n + span)];
        double s = 0.0;
        for (int r = 0; r < sf.rows(); ++r) {
            double inner = 0.0;
            for (int c = 0; c < sf.cols(); ++c) {
                inner += sf.cell_values()[static_cast<std::size_t>(r) * sf.cols() + c] *
                         cf[static_cast<std::size_t>(c)];
            }
            s += rf[static_cast<std::size_t>(r)] * inner;
        }
        return s;
    };

    IsiIciResult out;
    out.shells = shells;
    out.value = 0.0;
    for (int s = 1; s <= shells; ++s) {
        double shell = 0.0;
        for (int n = -s; n <= s; ++n) {
            for (int m = -s; m <= s; ++m) {
                if (std::max(std::abs(n), std::abs(m)) != s) continue;
                shell += term(n, m);
            }
        }
        out.shell_sums.push_back(shell);
        out.value += shell;
    }

    // Distance bound on every remaining term: the Gaussian weight evaluated
    // at the gap between the shifted support and the lattice point.
    auto bound = [&](int n, int m) {
        const double dt = std::max(0.0, std::fabs(n) * g.t - sf.tau_max());
        const double df = std::max(0.0, std::fabs(m) * g.f - sf.nu_max());
        return std::exp(-(a_tau * dt * dt + a_nu * df * df));
    };
    double tail = 0.0;
    for (int s = shells + 1; s <= shells + 64; ++s) {
        double shell = 0.0;
        for (int n = -s; n <= s; ++n) {
            for (int m = -s; m <= s; ++m) {
                if (std::max(std::abs(n), std::abs(m)) != s) continue;
                shell += bound(n, m);
            }
        }
        tail += shell;
        if (shell < 1e-18 * std::max(out.value + tail, 1e-300)) break;
    }
    out.tail_estimate = tail;
    return out;
}

std::vector<RatioSweepPoint> e4_ratio_sweep(const Scattering& sf, double tf_product, int points,
                                            double log_span) {
    if (points < 3) throw std::invalid_argument("e4_ratio_sweep: need at least 3 points");
    if (!(tf_product > 1.0)) throw config_error("e4_ratio_sweep: tf_product must exceed 1");
    if (!(log_span > 0.0)) throw std::invalid_argument("e4_ratio_sweep: log_span must be positive");
    const double r0 = sf.tau_max() / sf.nu_max();
    std::vector<RatioSweepPoint> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double frac = static_cast<double>(i) / (points - 1) - 0.5;
        const double ratio = r0 * std::pow(10.0, log_span * frac);
        const Grid g{std::sqrt(tf_product * ratio), std::sqrt(tf_product / ratio)};
        const GaussianPulse p = GaussianPulse::matched(g);
        out.push_back({ratio, isi_ici_bound_e4(sf, p, g).value});
    }
    return out;
}

} // namespace fadecap
