// SPDX-License-Identifier: MIT
#include "fadecap/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>

#include <fftw3.h>

#include "fadecap/quadrature.hpp"
#include "fadecap/special.hpp"
#include "fadecap/toeplitz.hpp"

namespace fadecap {

namespace {

std::mutex g_fftw_mutex;

// ---------------------------------------------------------------------------
// Fejer-kernel integrals.
//
// F_N(t) = (1/N) (sin(pi N t) / sin(pi t))^2 is the order-N Fejer kernel on
// [-1/2, 1/2] with unit mass. The circulant diagonal weights are Fejer means
// of the delay spectrum, so summing log terms over millions of DFT bins
// reduces to evaluating the kernel's CDF and first-moment integral at
// piecewise-linear breakpoints. Closed trigonometric partial sums are
// combined with Euler-Maclaurin tails through the first derivative term;
// the absolute error is O(1/N^2) uniformly on the fundamental interval.

// integral of F_N from 0 to x (odd in x), |x| <= 1/2
double fejer_cdf(double x, double n) {
    const double ax = std::fabs(x);
    if (ax < 1e-12) return n * x;
    const double y = 2.0 * pi * n * ax;
    double v = sin_integral(y) / pi - std::sin(y) / (2.0 * pi * n) +
               ax * std::cos(y) / (6.0 * n) - std::sin(y) / (12.0 * pi * n * n);
    v -= std::sin(pi * n * ax) * std::sin(pi * (n - 1.0) * ax) / (pi * n * std::sin(pi * ax));
    return x >= 0.0 ? v : -v;
}

// integral of t F_N(t) from 0 to x (even in x), |x| <= 1/2
double fejer_first_moment(double x, double n) {
    const double ax = std::fabs(x);
    if (ax < 1e-12) return 0.5 * n * x * x;
    const double y = 2.0 * pi * n * ax;
    // C2 = sum_{m=1}^{N-1} (cos(2 pi m x) - 1)/m^2
    const double c2 = pi * pi * ax * ax - 2.0 * pi * ax * sin_integral(y) +
                      (1.0 - std::cos(y)) * (1.0 / n + 0.5 / (n * n));
    // C1 = sum_{m=1}^{N-1} (cos(2 pi m x) - 1)/m
    const double sx = std::sin(pi * ax);
    const double c1 = std::log(pi * ax / sx) - entire_cin(y) + (1.0 - std::cos(y)) / (2.0 * n);
    return ax * fejer_cdf(ax, n) - 0.5 * ax * ax + (c2 - c1 / n) / (2.0 * pi * pi);
}

// Fejer mean of the piecewise-linear spectrum at offset phi.
double fejer_mean(const std::vector<LinPiece>& pieces, double phi, double n) {
    double acc = 0.0;
    for (const LinPiece& p : pieces) {
        const double xl = phi - p.lo;
        const double xr = phi - p.hi;
        const double dphi = fejer_cdf(xl, n) - fejer_cdf(xr, n);
        if (p.beta == 0.0) {
            acc += p.alpha * dphi;
        } else {
            const double dpsi = fejer_first_moment(xl, n) - fejer_first_moment(xr, n);
            acc += (p.alpha + p.beta * phi) * dphi - p.beta * dpsi;
        }
    }
    return acc;
}

// Delay spectrum of the frequency-lag sequence r[0, m] in DFT units:
// S(phi) = (1/F) q(-phi / F) on |phi| <= tau_max F (no aliasing when
// F <= 1/(2 tau_max)). Returned as linear pieces sorted in phi.
std::vector<LinPiece> delay_spectrum_pieces(const BoundInputs& in) {
    const auto tau_pieces = in.sf.delay_marginal_pieces(4096);
    std::vector<LinPiece> out;
    out.reserve(tau_pieces.size());
    const double f = in.grid.f;
    for (const LinPiece& p : tau_pieces) {
        // tau = -phi/F maps [lo, hi] to [-hi F, -lo F]; S(phi) = q(-phi/F)/F
        LinPiece q;
        q.lo = -p.hi * f;
        q.hi = -p.lo * f;
        q.alpha = p.alpha / f;
        q.beta = -p.beta / (f * f);
        out.push_back(q);
    }
    std::sort(out.begin(), out.end(), [](const LinPiece& a, const LinPiece& b) { return a.lo < b.lo; });
    return out;
}

struct CirculantModel {
    // Either the dense weights (FFT route) or the separated near-field model.
    std::vector<double> dense;
    // separated route
    std::vector<double> near_weights; // fejer means at the near indices
    double far_weight_sum = 0.0;      // exact mass identity remainder
    std::size_t n = 0;
    bool separated = false;
};

double wrap_unit(double phi) {
    phi -= std::floor(phi + 0.5);
    return phi;
}

// FFT of the Fejer-weighted lag sequence; exact up to rounding.
std::vector<double> circulant_weights_fft(const BoundInputs& in, std::size_t n) {
    std::vector<cplx> a(n);
    const double nd = static_cast<double>(n);
    for (std::size_t m = 0; m < n; ++m) {
        const cplx r = in.sf.delay_marginal_ft(static_cast<double>(m) * in.grid.f);
        a[m] = (2.0 / nd) * (nd - static_cast<double>(m)) * r;
    }
    std::vector<cplx> out(n);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_plan plan =
            fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(a.data()),
                             reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
        if (plan == nullptr) throw numeric_error("circulant_weights: FFTW planning failed");
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        // mathematically >= 0 (Fejer mean of a nonnegative spectrum);
        // rounding can leave tiny negatives
        w[i] = std::max(0.0, out[i].real() - 1.0);
    }
    return w;
}

CirculantModel build_circulant_model(const BoundInputs& in, std::size_t n, double max_amp,
                                     std::size_t fft_cap) {
    CirculantModel model;
    model.n = n;
    if (n <= fft_cap) {
        model.dense = circulant_weights_fft(in, n);
        return model;
    }

    model.separated = true;
    const auto pieces = delay_spectrum_pieces(in);
    double mass = 0.0;
    double support = 0.0;
    for (const LinPiece& p : pieces) {
        mass += p.mass();
        support = std::max({support, std::fabs(p.lo), std::fabs(p.hi)});
    }
    const double nd = static_cast<double>(n);

    // Margin beyond the spectral support so that linearizing the far field
    // keeps the curvature error below ~1e-9 of the log sum. Each far bin at
    // circular distance d carries weight at most mass/(4 N d^2), and the
    // log1p curvature dropped per bin is at most (amp * weight)^2 / 2;
    // summing both tails beyond M bins gives amp^2 mass^2 N^2 / (48 M^3).
    const double scale2 = max_amp * mass * nd;
    const double tol = 1e-9 * std::max(1.0, scale2);
    std::size_t margin = 4096;
    for (int pass = 0; pass < 40; ++pass) {
        const double m3 = static_cast<double>(margin) * static_cast<double>(margin) *
                          static_cast<double>(margin);
        if (scale2 * scale2 / (48.0 * m3) < tol || margin >= n / 2) break;
        margin *= 2;
    }

    const double reach = support + static_cast<double>(margin) / nd;
    if (2.0 * support + static_cast<double>(margin) / nd > 0.5 - 1e-9) {
        throw numeric_error(
            "circulant weights: spectral support too wide for the separated route at this size");
    }
    const auto idx_reach = static_cast<long long>(std::ceil(reach * nd));
    if (idx_reach > 30000000LL) {
        throw numeric_error("circulant weights: near field too large; reduce bandwidth or widen F");
    }

    double near_sum = 0.0;
    model.near_weights.reserve(static_cast<std::size_t>(2 * idx_reach + 1));
    for (long long k = -idx_reach; k <= idx_reach; ++k) {
        const double phi = wrap_unit(static_cast<double>(k) / nd);
        const double w = std::max(0.0, fejer_mean(pieces, phi, nd));
        model.near_weights.push_back(w);
        near_sum += w;
    }
    model.far_weight_sum = std::max(0.0, nd * mass - near_sum);
    return model;
}

double model_log_sum(const CirculantModel& model, double amp) {
    if (!model.separated) {
        double s = 0.0;
        for (double w : model.dense) s += std::log1p(amp * w);
        return s;
    }
    double s = 0.0;
    for (double w : model.near_weights) s += std::log1p(amp * w);
    // Far bins are in the linear regime of log1p; the grouped remainder uses
    // the exact total-weight identity sum_i w_i = N * mass.
    s += amp * model.far_weight_sum;
    return s;
}

// ---------------------------------------------------------------------------

double mi_rate_term(const BoundInputs& in, const Bandwidth& bw, MiCache& mi, double gamma) {
    const double tf = in.grid.tf();
    const double rho = gamma * in.power.p * tf / bw.effective;
    const MiValue v = mi.at(rho);
    return bw.effective / (gamma * tf) * v.value;
}

template <typename F>
GammaValue maximize_over_gamma(const F& f, double kappa) {
    if (kappa <= 1.0 + 1e-12) {
        return {f(1.0), 1.0};
    }
    constexpr int coarse = 16;
    double best_g = 1.0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < coarse; ++i) {
        const double g = 1.0 + (kappa - 1.0) * static_cast<double>(i) / (coarse - 1);
        const double v = f(g);
        if (v > best_v) {
            best_v = v;
            best_g = g;
        }
    }
    const double step = (kappa - 1.0) / (coarse - 1);
    double lo = std::max(1.0, best_g - step);
    double hi = std::min(kappa, best_g + step);
    const double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 60 && (hi - lo) > 1e-10 * kappa; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    const double gm = 0.5 * (lo + hi);
    const double vm = f(gm);
    if (vm >= best_v) return {vm, gm};
    return {best_v, best_g};
}

} // namespace

Bandwidth quantize_bandwidth(const Grid& g, double bandwidth_hz) {
    validate_grid(g);
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) {
        throw config_error("bandwidth must be positive and finite");
    }
    const auto slots = static_cast<long>(std::floor(bandwidth_hz / g.f * (1.0 + 4e-16)));
    if (slots < 1) {
        throw config_error("bandwidth below one subcarrier spacing F");
    }
    return {bandwidth_hz, static_cast<double>(slots) * g.f, slots};
}

double coherent_upper(const BoundInputs& in, const Bandwidth& bw) {
    validate_power(in.power);
    const double tf = in.grid.tf();
    if (in.power.p == 0.0) return 0.0;
    const double rho = in.power.p * tf / bw.effective;
    return bw.effective / tf * awgn_fading_capacity(rho);
}

double penalty_psi(const BoundInputs& in, const Bandwidth& bw) {
    validate_power(in.power);
    if (in.power.p == 0.0) return 0.0;
    const double b = bw.effective;
    return b / in.power.kappa * in.sf.log_moment(in.power.kappa * in.power.p / b);
}

double alpha_star(const BoundInputs& in, const Bandwidth& bw, AlphaDiag* diag) {
    const double psi = penalty_psi(in, bw);
    const double p = in.power.p;
    double alpha;
    bool clipped = false;
    if (p == 0.0 || psi <= 0.0) {
        alpha = 1.0;
    } else {
        alpha = std::min(1.0, bw.effective / in.grid.tf() * (1.0 / psi - 1.0 / p));
        if (alpha < 1e-12) {
            // psi <= P analytically, so a negative value is rounding noise
            alpha = 1e-12;
            clipped = true;
        }
    }
    if (diag != nullptr) {
        diag->psi = psi;
        diag->alpha = alpha;
        diag->clipped = clipped;
    }
    return alpha;
}

double alpha_star_threshold_p_over_b(const BoundInputs& in) {
    const double spread = in.sf.spread();
    const double tf = in.grid.tf();
    const double kappa = in.power.kappa;
    // threshold 0 encodes "never", for channels too spread for the bound to clip
    if (!(spread <= kappa / (3.0 * tf))) return 0.0;
    return spread / kappa * std::expm1(kappa / (2.0 * tf * spread));
}

bool alpha_star_condition(const BoundInputs& in, double bandwidth_hz) {
    const double th = alpha_star_threshold_p_over_b(in);
    return th > 0.0 && in.power.p / bandwidth_hz < th;
}

double upper_u1(const BoundInputs& in, const Bandwidth& bw, AlphaDiag* diag) {
    AlphaDiag local;
    const double alpha = alpha_star(in, bw, &local);
    if (diag != nullptr) *diag = local;
    if (in.power.p == 0.0) return 0.0;
    const double tf = in.grid.tf();
    const double b = bw.effective;
    return b / tf * std::log1p(alpha * in.power.p * tf / b) - alpha * local.psi;
}

MiCache::MiCache(MiPolicy policy, std::uint64_t point_salt) : policy_(policy), salt_(point_salt) {}

MiValue MiCache::at(double rho) {
    for (const auto& [key, val] : cache_) {
        if (key == rho) return val;
    }
    MiPolicy p = policy_;
    p.seed = derive_seed(policy_.seed, salt_, std::bit_cast<std::uint64_t>(rho));
    const MiValue v = mi_cm_coherent(rho, p);
    if (v.method == MiMethod::taylor) used_taylor_ = true;
    if (v.method == MiMethod::monte_carlo) used_mc_ = true;
    cache_.emplace_back(rho, v);
    return v;
}

namespace {

// integral over theta of logdet(I + rho C(theta)) with
// c_m(theta) = (1/T) * delay transform of the Doppler slice at nu = theta/T.
// Piecewise structure of the Doppler marginal keeps this cheap.
double exact_penalty_theta_integral(const BoundInputs& in, long slots, double rho) {
    const double t = in.grid.t;
    const double theta_max = in.sf.nu_max() * t;
    if (theta_max > 0.5 + 1e-12) {
        throw config_error("exact penalty: lattice is time-aliased (T > 1/(2 nu_max))");
    }
    auto lags_at = [&](double theta) {
        std::vector<cplx> lags(static_cast<std::size_t>(slots));
        for (long m = 0; m < slots; ++m) {
            lags[static_cast<std::size_t>(m)] =
                in.sf.doppler_slice_delay_ft(theta / t, static_cast<double>(m) * in.grid.f) / t;
        }
        return lags;
    };
    auto logdet_at = [&](double theta) { return toeplitz_logdet_capacity(lags_at(theta), rho); };

    if (in.sf.is_doppler_flat()) {
        return 2.0 * theta_max * logdet_at(0.0);
    }
    if (in.sf.shape() == ScatteringShape::tabulated) {
        const double w_theta = 2.0 * theta_max / in.sf.rows();
        double s = 0.0;
        for (int r = 0; r < in.sf.rows(); ++r) {
            const double mid = -theta_max + (r + 0.5) * w_theta;
            s += w_theta * logdet_at(mid);
        }
        return s;
    }
    const bool symmetric = in.sf.doppler_profile().kind() != ProfileKind::table;
    if (symmetric) {
        return 2.0 * integrate(logdet_at, 0.0, theta_max, {1e-8, 0.0, 24});
    }
    return integrate(logdet_at, -theta_max, theta_max, {1e-8, 0.0, 24});
}

} // namespace

GammaValue lower_l1(const BoundInputs& in, const Bandwidth& bw, MiCache& mi,
                    long exact_slot_limit) {
    validate_power(in.power);
    if (bw.slots > exact_slot_limit) {
        throw config_error("exact-penalty bound: slot count exceeds the exact-path limit; "
                           "use the circulant bound instead");
    }
    if (in.power.p == 0.0) return {0.0, 1.0};
    const double tf = in.grid.tf();
    auto objective = [&](double gamma) {
        const double rho = gamma * in.power.p * tf / bw.effective;
        const double penalty =
            exact_penalty_theta_integral(in, bw.slots, rho) / (gamma * in.grid.t);
        return mi_rate_term(in, bw, mi, gamma) - penalty;
    };
    return maximize_over_gamma(objective, in.power.kappa);
}

GammaValue lower_l1cf(const BoundInputs& in, const Bandwidth& bw, MiCache& mi,
                      std::size_t fft_cap) {
    validate_power(in.power);
    if (in.power.p == 0.0) return {0.0, 1.0};
    const double two_nu = 2.0 * in.sf.nu_max();
    const double amp_at = in.power.p * in.grid.f / (two_nu * bw.effective);
    const CirculantModel model = build_circulant_model(
        in, static_cast<std::size_t>(bw.slots), in.power.kappa * amp_at, fft_cap);
    auto objective = [&](double gamma) {
        const double penalty = two_nu / gamma * model_log_sum(model, gamma * amp_at);
        return mi_rate_term(in, bw, mi, gamma) - penalty;
    };
    return maximize_over_gamma(objective, in.power.kappa);
}

GammaValue lower_l1approx(const BoundInputs& in, const Bandwidth& bw, MiCache& mi) {
    validate_power(in.power);
    if (in.power.p == 0.0) return {0.0, 1.0};
    const double b = bw.effective;
    auto objective = [&](double gamma) {
        const double penalty = b / gamma * in.sf.log_moment(gamma * in.power.p / b);
        return mi_rate_term(in, bw, mi, gamma) - penalty;
    };
    return maximize_over_gamma(objective, in.power.kappa);
}

GammaValue lower_l1a(const BoundInputs& in, const Bandwidth& bw) {
    validate_power(in.power);
    if (in.power.p == 0.0) return {0.0, 1.0};
    const double b = bw.effective;
    const double tf = in.grid.tf();
    const double p = in.power.p;
    auto objective = [&](double gamma) {
        return p - gamma * p * p * tf / b - b / gamma * in.sf.log_moment(gamma * p / b);
    };
    return maximize_over_gamma(objective, in.power.kappa);
}

std::vector<double> circulant_weights(const BoundInputs& in, std::size_t n, std::size_t fft_cap) {
    if (n == 0) throw std::invalid_argument("circulant_weights: n must be >= 1");
    if (n <= fft_cap) return circulant_weights_fft(in, n);
    const auto pieces = delay_spectrum_pieces(in);
    std::vector<double> w(n);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double phi = wrap_unit(static_cast<double>(i) / nd);
        w[i] = std::max(0.0, fejer_mean(pieces, phi, nd));
    }
    return w;
}

double circulant_log_sum(const BoundInputs& in, std::size_t n, double amp, std::size_t fft_cap) {
    const CirculantModel model = build_circulant_model(in, n, amp, fft_cap);
    return model_log_sum(model, amp);
}

SweepResult run_sweep(const BoundInputs& in, const SweepConfig& cfg) {
    validate_grid(in.grid);
    validate_power(in.power);
    std::vector<double> bands = cfg.bandwidths;
    if (bands.empty()) throw config_error("sweep: no bandwidth points");
    std::sort(bands.begin(), bands.end());

    SweepResult result;
    result.points.resize(bands.size());

    par::parallel_for(
        bands.size(),
        [&](std::size_t idx) {
            const Bandwidth bw = quantize_bandwidth(in.grid, bands[idx]);
            SweepPoint& pt = result.points[idx];
            pt.bandwidth = bw.requested;
            pt.effective_bandwidth = bw.effective;
            pt.slots = bw.slots;

            if (in.power.p == 0.0) {
                pt.ucoh = pt.u1 = pt.l1cf = pt.l1approx = pt.l1a = 0.0;
                pt.alpha = 1.0;
                pt.alpha_clipped = false;
                pt.l1 = 0.0;
                pt.mi_method = MiMethod::taylor;
                return;
            }

            AlphaDiag diag;
            pt.ucoh = coherent_upper(in, bw);
            pt.u1 = upper_u1(in, bw, &diag);
            pt.alpha = diag.alpha;
            pt.alpha_clipped = diag.clipped;

            MiCache mi(cfg.mi, static_cast<std::uint64_t>(idx));
            pt.l1a = lower_l1a(in, bw).value;
            pt.l1approx = lower_l1approx(in, bw, mi).value;
            const GammaValue cf = lower_l1cf(in, bw, mi, cfg.fft_cap);
            pt.l1cf = cf.value;
            if (bw.slots <= cfg.exact_slot_limit) {
                pt.l1 = lower_l1(in, bw, mi, cfg.exact_slot_limit).value;
            } else {
                pt.l1.reset();
            }

            const double rho_star = cf.gamma * in.power.p * in.grid.tf() / bw.effective;
            if (rho_star < cfg.mi.taylor_below) {
                pt.mi_method = MiMethod::taylor;
            } else if (rho_star <= cfg.mi.quadrature_below) {
                pt.mi_method = MiMethod::quadrature;
            } else {
                pt.mi_method = MiMethod::monte_carlo;
            }
        },
        cfg.mode);

    for (const SweepPoint& pt : result.points) {
        if (pt.mi_method == MiMethod::taylor) result.any_taylor = true;
        if (pt.mi_method == MiMethod::monte_carlo) result.any_monte_carlo = true;
    }
    return result;
}

} // namespace fadecap
