// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fadecap/parallel.hpp"

namespace fadecap {

/// Self-contained invariant suites over all modules. The fast level uses
/// small deterministic cases; full adds the Monte-Carlo statistics checks.
/// Every check is pass/fail with a one-line detail; nothing throws for a
/// mere failure (infrastructure errors still do).

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

ValidationReport run_validation(bool full, std::uint64_t seed, par::Mode mode);

/// One `check=<name> status=<pass|fail> detail=<...>` line per check plus a
/// trailing `validation: <n>/<total> passed` summary.
void write_report(std::ostream& out, const ValidationReport& report);

} // namespace fadecap
