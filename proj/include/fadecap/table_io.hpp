// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "fadecap/scattering.hpp"

namespace fadecap {

/// Plain-text matrix formats.
///
/// Tabulated scattering input:
///   nu_max=<Hz> tau_max=<s> rows=<R> cols=<C>
/// followed by R rows of C nonnegative reals; rows are Doppler bins, columns
/// delay bins. Values are renormalized to unit volume on load.
///
/// Complex matrix dumps reuse the same layout:
///   rows=<R> cols=<C>
/// followed by R rows of C entries, each written as `re,im`.

Scattering read_scattering_table(std::istream& in, const std::string& origin = "<stream>");
Scattering load_scattering_table(const std::string& path);

void write_complex_matrix(std::ostream& out, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_complex_matrix(std::istream& in, const std::string& origin = "<stream>");

void save_complex_matrix(const std::string& path, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd load_complex_matrix(const std::string& path);

} // namespace fadecap
