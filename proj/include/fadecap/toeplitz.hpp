// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "fadecap/common.hpp"

namespace fadecap {

/// log det (I + rho M) for Hermitian positive semidefinite M.
/// Cholesky fast path; on failure an eigenvalue decomposition is used and
/// eigenvalues down to -1e-10 * lambda_max are clipped to zero. Anything more
/// negative raises numeric_error.
double logdet_capacity(const Eigen::MatrixXcd& m, double rho);

/// Same for a Hermitian Toeplitz matrix given by lags t[0..N-1] (t[0] real).
double toeplitz_logdet_capacity(const std::vector<cplx>& lags, double rho);

/// Builds the Hermitian Toeplitz matrix from one-sided lags.
Eigen::MatrixXcd toeplitz_from_lags(const std::vector<cplx>& lags);

/// Eigenvalues of the Hermitian circulant whose first row is `row`
/// (row[k] multiplies index offset +k mod N). One DFT of length N.
std::vector<double> circulant_diagonals(const std::vector<cplx>& row);

/// Average log det growth of I + rho T_N(S) against its limit:
/// returns {(1/N) logdet(I + rho T_N), integral of log(1 + rho S) d theta}.
/// `lag` supplies t_k, `spectrum` supplies S(theta) on [-1/2, 1/2].
std::pair<double, double> szego_check(const std::function<cplx(long)>& lag,
                                      const std::function<double(double)>& spectrum, int n,
                                      double rho);

/// log det (I + rho R) / K for the two-level structure R[(t,i),(t',j)] =
/// r(t - t', i - j) with K outer (time) and F inner (frequency) indices.
/// K*F is capped at 4096.
double two_level_logdet(const std::function<cplx(long, long)>& r, int k_slots, int f_slots,
                        double rho);

/// K -> infinity limit of two_level_logdet: the integral over theta in
/// [-1/2, 1/2] of logdet(I_F + rho C(theta)), where C(theta) is Hermitian
/// Toeplitz with entries c_m(theta) = sum_n r(n, m) exp(-j 2 pi n theta),
/// supplied for m >= 0. `theta_support` restricts the integration to
/// [-theta_support, theta_support] when the symbol vanishes outside.
double two_level_limit(const std::function<cplx(double, long)>& c_m, int f_slots, double rho,
                       double theta_support = 0.5);

/// Noncausal Wiener smoothing error of a unit-variance stationary sequence
/// with power spectrum S at SNR gamma: integral of S/(1 + gamma S) d theta.
double noncausal_mmse(const std::function<double(double)>& spectrum, double gamma);

/// Minimum over all nonempty index subsets (N <= 14, exhaustive) of
/// logdet(I + rho R_S) / |S| for the Hermitian Toeplitz R from `lags`.
double min_subset_logdet_rate(const std::vector<cplx>& lags, double rho);

/// Random correlation sequence with a nonnegative spectrum by construction:
/// lags are the autocorrelation of `order` i.i.d. complex Gaussian taps,
/// scaled to t_0 = 1. Returns order entries t_0 .. t_{order-1}.
std::vector<cplx> random_psd_lags(int order, std::uint64_t seed, std::uint64_t stream = 0);

/// S(theta) = sum_k t_k exp(-j 2 pi k theta) over all lags (Hermitian
/// extension); real and >= 0 when the lags come from a valid spectrum.
double psd_eval(const std::vector<cplx>& lags, double theta);

} // namespace fadecap
