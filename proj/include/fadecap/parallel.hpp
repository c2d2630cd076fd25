// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <functional>

namespace fadecap::par {

enum class Mode { serial, openmp };

/// Worker count: FADECAP_WORKERS if set (>=1), else the OpenMP default,
/// else 1. This is the only environment knob besides the default seed.
int worker_count();

Mode default_mode();

/// Runs body(i) for i in [0, n). The openmp mode uses a static schedule;
/// bodies must be independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  Mode mode = default_mode());

/// Deterministic reduction: partial sums are accumulated into a fixed number
/// of chunks keyed by index, then combined serially, so the result does not
/// depend on the worker count.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term,
                    Mode mode = default_mode());

/// Same contract for a pair of statistics evaluated per index
/// (typically a value and its square).
void parallel_sum2(std::size_t n, const std::function<void(std::size_t, double&, double&)>& term,
                   double& out1, double& out2, Mode mode = default_mode());

} // namespace fadecap::par
