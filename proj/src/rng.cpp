// SPDX-License-Identifier: MIT
#include "fadecap/rng.hpp"

#include <cmath>

namespace fadecap {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

// Top 53 bits of a 64-bit word, offset to the open interval (0,1).
inline double to_open_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        round_once(counter, key);
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return counter;
}

std::array<std::uint32_t, 4> CounterRng::block(std::uint64_t n) const {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(n),
        static_cast<std::uint32_t>(n >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32),
    };
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed_),
        static_cast<std::uint32_t>(seed_ >> 32),
    };
    return philox4x32(ctr, key);
}

std::pair<double, double> CounterRng::uniform2(std::uint64_t n) const {
    const auto b = block(n);
    const std::uint64_t w0 = static_cast<std::uint64_t>(b[0]) | (static_cast<std::uint64_t>(b[1]) << 32);
    const std::uint64_t w1 = static_cast<std::uint64_t>(b[2]) | (static_cast<std::uint64_t>(b[3]) << 32);
    return {to_open_unit(w0), to_open_unit(w1)};
}

std::pair<double, double> CounterRng::normal2(std::uint64_t n) const {
    const auto [u1, u2] = uniform2(n);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::complex<double> CounterRng::cnormal(std::uint64_t n) const {
    const auto [x, y] = normal2(n);
    return {x * 0.7071067811865475244, y * 0.7071067811865475244};
}

} // namespace fadecap
