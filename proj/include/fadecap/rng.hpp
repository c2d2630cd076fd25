// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

namespace fadecap {

/// Philox-4x32-10 counter-based generator.
///
/// Every 128-bit counter value maps to an independent 128-bit output block,
/// so any sample with a stable index can be regenerated in isolation. Results
/// are bit-identical for a given (seed, stream, index) no matter how work is
/// chunked across threads, which is what the simulation and Monte Carlo code
/// rely on for reproducibility.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Raw 128-bit block for sample index `n`.
    std::array<std::uint32_t, 4> block(std::uint64_t n) const;

    /// Two iid uniforms on the open interval (0,1) from block `n`.
    std::pair<double, double> uniform2(std::uint64_t n) const;

    /// First uniform of block `n`.
    double uniform(std::uint64_t n) const { return uniform2(n).first; }

    /// Two iid standard normals (Box-Muller) from block `n`.
    std::pair<double, double> normal2(std::uint64_t n) const;

    /// Circularly symmetric complex normal with E|z|^2 = 1 from block `n`.
    std::complex<double> cnormal(std::uint64_t n) const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace fadecap
