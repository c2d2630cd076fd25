// SPDX-License-Identifier: MIT
// Regenerates the constants that are pinned elsewhere: the preset checksum
// (compared at CLI startup) and a few Monte-Carlo reference values. Run after
// any deliberate change to the shipped scenarios and update the pins by hand.
#include <cstdio>

#include "fadecap/mutual_information.hpp"
#include "fadecap/presets.hpp"

using namespace fadecap;

int main() {
    std::printf("preset_checksum = 0x%016llx\n",
                static_cast<unsigned long long>(preset_checksum()));

    for (double rho : {1.0, 10.0, 120.0}) {
        const MiEstimate est = mi_cm_coherent_mc(rho, 10000000, 42, par::Mode::serial);
        std::printf("mi_cm_mc rho=%-6g samples=1e7 seed=42 -> %.12e (se %.3e)\n", rho, est.value,
                    est.std_error);
    }
    for (double rho : {0.5, 5.0, 50.0}) {
        std::printf("mi_cm_quad rho=%-6g -> %.15e\n", rho, mi_cm_coherent_quad(rho));
    }
    return 0;
}
