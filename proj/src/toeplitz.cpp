// SPDX-License-Identifier: MIT
#include "fadecap/toeplitz.hpp"

#include <cmath>
#include <mutex>

#include <fftw3.h>

#include "fadecap/quadrature.hpp"
#include "fadecap/rng.hpp"

namespace fadecap {

namespace {

std::mutex g_fftw_mutex; // FFTW planning is not thread safe

double logdet_via_eigenvalues(const Eigen::MatrixXcd& m, double rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw numeric_error("logdet_capacity: eigenvalue decomposition failed");
    }
    const double lam_max = es.eigenvalues().maxCoeff();
    const double floor_tol = -1e-10 * std::max(lam_max, 0.0);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam < 0.0) {
            if (lam < floor_tol) {
                throw numeric_error("logdet_capacity: matrix is not positive semidefinite");
            }
            lam = 0.0;
        }
        s += std::log1p(rho * lam);
    }
    return s;
}

} // namespace

double logdet_capacity(const Eigen::MatrixXcd& m, double rho) {
    if (m.rows() != m.cols()) throw std::invalid_argument("logdet_capacity: matrix must be square");
    if (rho < 0.0) throw std::invalid_argument("logdet_capacity: rho must be >= 0");
    if (rho == 0.0) return 0.0;
    const Eigen::Index n = m.rows();
    Eigen::MatrixXcd shifted = rho * m;
    shifted.diagonal().array() += 1.0;
    Eigen::LLT<Eigen::MatrixXcd> llt(shifted);
    if (llt.info() == Eigen::Success) {
        // I + rho*m has smallest eigenvalue >= 1 when m is PSD, and every
        // Schur pivot of a positive definite matrix is >= its smallest
        // eigenvalue. A pivot far below 1 therefore flags an indefinite m
        // that roundoff kept barely factorable; recheck via eigenvalues.
        double s = 0.0;
        bool pivots_ok = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d = std::real(llt.matrixLLT()(i, i));
            if (!(d * d >= 0.5) || !std::isfinite(d)) {
                pivots_ok = false;
                break;
            }
            s += std::log(d);
        }
        if (pivots_ok) return 2.0 * s;
    }
    return logdet_via_eigenvalues(m, rho);
}

Eigen::MatrixXcd toeplitz_from_lags(const std::vector<cplx>& lags) {
    if (lags.empty()) throw std::invalid_argument("toeplitz_from_lags: need at least one lag");
    const auto n = static_cast<Eigen::Index>(lags.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const long d = static_cast<long>(i) - static_cast<long>(j);
            m(i, j) = d >= 0 ? lags[static_cast<std::size_t>(d)]
                             : std::conj(lags[static_cast<std::size_t>(-d)]);
        }
    }
    return m;
}

double toeplitz_logdet_capacity(const std::vector<cplx>& lags, double rho) {
    return logdet_capacity(toeplitz_from_lags(lags), rho);
}

std::vector<double> circulant_diagonals(const std::vector<cplx>& row) {
    const std::size_t n = row.size();
    if (n == 0) throw std::invalid_argument("circulant_diagonals: empty row");
    std::vector<cplx> out(n);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_plan plan = fftw_plan_dft_1d(
            static_cast<int>(n),
            reinterpret_cast<fftw_complex*>(const_cast<cplx*>(row.data())),
            reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
            FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
        if (plan == nullptr) throw numeric_error("circulant_diagonals: FFTW planning failed");
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    std::vector<double> diag(n);
    for (std::size_t k = 0; k < n; ++k) diag[k] = out[k].real();
    return diag;
}

std::pair<double, double> szego_check(const std::function<cplx(long)>& lag,
                                      const std::function<double(double)>& spectrum, int n,
                                      double rho) {
    if (n < 1) throw std::invalid_argument("szego_check: n must be >= 1");
    std::vector<cplx> lags(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) lags[static_cast<std::size_t>(k)] = lag(k);
    const double finite = toeplitz_logdet_capacity(lags, rho) / n;
    const double limit =
        integrate([&](double th) { return std::log1p(rho * spectrum(th)); }, -0.5, 0.5,
                  {1e-10, 0.0, 44});
    return {finite, limit};
}

double two_level_logdet(const std::function<cplx(long, long)>& r, int k_slots, int f_slots,
                        double rho) {
    if (k_slots < 1 || f_slots < 1) {
        throw std::invalid_argument("two_level_logdet: slot counts must be >= 1");
    }
    const long total = static_cast<long>(k_slots) * f_slots;
    if (total > 4096) {
        throw config_error("two_level_logdet: K*F must not exceed 4096; use the limit form");
    }
    Eigen::MatrixXcd m(total, total);
    for (long a = 0; a < total; ++a) {
        const long t1 = a / f_slots;
        const long i1 = a % f_slots;
        for (long b = 0; b < total; ++b) {
            const long t2 = b / f_slots;
            const long i2 = b % f_slots;
            m(a, b) = r(t1 - t2, i1 - i2);
        }
    }
    return logdet_capacity(m, rho) / k_slots;
}

double two_level_limit(const std::function<cplx(double, long)>& c_m, int f_slots, double rho,
                       double theta_support) {
    if (f_slots < 1) throw std::invalid_argument("two_level_limit: f_slots must be >= 1");
    if (!(theta_support > 0.0) || theta_support > 0.5) {
        throw std::invalid_argument("two_level_limit: theta_support must be in (0, 1/2]");
    }
    auto integrand = [&](double theta) {
        std::vector<cplx> lags(static_cast<std::size_t>(f_slots));
        for (int m = 0; m < f_slots; ++m) lags[static_cast<std::size_t>(m)] = c_m(theta, m);
        return toeplitz_logdet_capacity(lags, rho);
    };
    // The logdet is smooth in theta but each evaluation is costly, so the
    // panel tolerance is kept moderate.
    return integrate(integrand, -theta_support, theta_support, {1e-8, 0.0, 30});
}

double noncausal_mmse(const std::function<double(double)>& spectrum, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("noncausal_mmse: gamma must be >= 0");
    return integrate([&](double th) {
        const double s = spectrum(th);
        return s / (1.0 + gamma * s);
    }, -0.5, 0.5, {1e-10, 0.0, 44});
}

double min_subset_logdet_rate(const std::vector<cplx>& lags, double rho) {
    const int n = static_cast<int>(lags.size());
    if (n < 1 || n > 14) {
        throw std::invalid_argument("min_subset_logdet_rate: need 1 <= N <= 14 lags");
    }
    const Eigen::MatrixXcd full = toeplitz_from_lags(lags);
    double best = std::numeric_limits<double>::infinity();
    const unsigned top = 1u << n;
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(n));
    for (unsigned mask = 1; mask < top; ++mask) {
        idx.clear();
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) idx.push_back(i);
        }
        const auto k = static_cast<Eigen::Index>(idx.size());
        Eigen::MatrixXcd sub(k, k);
        for (Eigen::Index a = 0; a < k; ++a) {
            for (Eigen::Index b = 0; b < k; ++b) {
                sub(a, b) = full(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
            }
        }
        const double rate = logdet_capacity(sub, rho) / static_cast<double>(k);
        best = std::min(best, rate);
    }
    return best;
}

std::vector<cplx> random_psd_lags(int order, std::uint64_t seed, std::uint64_t stream) {
    if (order < 1) throw std::invalid_argument("random_psd_lags: order must be >= 1");
    CounterRng rng(seed, stream);
    std::vector<cplx> taps(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        taps[static_cast<std::size_t>(k)] = rng.cnormal(static_cast<std::uint64_t>(k));
    }
    std::vector<cplx> lags(static_cast<std::size_t>(order));
    for (int m = 0; m < order; ++m) {
        cplx acc = 0.0;
        for (int k = m; k < order; ++k) {
            acc += taps[static_cast<std::size_t>(k)] * std::conj(taps[static_cast<std::size_t>(k - m)]);
        }
        lags[static_cast<std::size_t>(m)] = acc;
    }
    const double power = lags[0].real();
    if (!(power > 0.0)) throw numeric_error("random_psd_lags: degenerate tap draw");
    for (cplx& l : lags) l /= power;
    lags[0] = cplx(1.0, 0.0);
    return lags;
}

double psd_eval(const std::vector<cplx>& lags, double theta) {
    double acc = lags.empty() ? 0.0 : lags[0].real();
    for (std::size_t k = 1; k < lags.size(); ++k) {
        acc += 2.0 * (lags[k] * std::polar(1.0, -2.0 * pi * static_cast<double>(k) * theta)).real();
    }
    return acc;
}

} // namespace fadecap
