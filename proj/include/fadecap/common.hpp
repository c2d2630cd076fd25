// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fadecap {

using cplx = std::complex<double>;

/// Thrown for invalid user-facing configuration (bad flags, malformed files,
/// out-of-contract parameter combinations). Maps to CLI exit code 1.
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a numerical routine cannot reach its accuracy target or a
/// matrix fails a definiteness check beyond tolerance. Maps to CLI exit code 2.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the self-check suites on a failed invariant. Maps to CLI exit code 3.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double pi = 3.14159265358979323846264338327950288;

} // namespace fadecap
