// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fadecap/bounds.hpp"

namespace fadecap {

/// Sweep CSV layout. Comment lines (`# key = value`) carry the resolved
/// configuration; the header and row format are fixed:
///   bandwidth_hz,effective_bandwidth_hz,ucoh,u1,alpha_star,l1,l1cf,l1approx,l1a
/// Values are printed with 12 significant digits; bounds that were not
/// computed appear as empty fields.

extern const char* const kSweepCsvHeader;

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     const std::vector<std::pair<std::string, std::string>>& config_echo);

struct ParsedSweep {
    std::vector<std::string> comments;
    std::vector<SweepPoint> points; // mi_method not recoverable; alpha fields only
};

ParsedSweep parse_sweep_csv(std::istream& in);

/// Plain-text configuration: `[section]` headers and `key = value` lines,
/// '#' starts a comment. Keys are returned as "section.key"; keys before any
/// section header keep their bare name.
std::map<std::string, std::string> parse_config_file(std::istream& in,
                                                     const std::string& origin = "<config>");
std::map<std::string, std::string> load_config_file(const std::string& path);

} // namespace fadecap
