// SPDX-License-Identifier: MIT
#include "fadecap/sweep_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fadecap {

const char* const kSweepCsvHeader =
    "bandwidth_hz,effective_bandwidth_hz,ucoh,u1,alpha_star,l1,l1cf,l1approx,l1a";

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     const std::vector<std::pair<std::string, std::string>>& config_echo) {
    for (const auto& [key, value] : config_echo) {
        out << "# " << key << " = " << value << "\n";
    }
    out << kSweepCsvHeader << "\n";
    for (const SweepPoint& pt : result.points) {
        out << fmt(pt.bandwidth) << ',' << fmt(pt.effective_bandwidth) << ',' << fmt(pt.ucoh)
            << ',' << fmt(pt.u1) << ',' << fmt(pt.alpha) << ',';
        if (pt.l1.has_value()) out << fmt(*pt.l1);
        out << ',' << fmt(pt.l1cf) << ',' << fmt(pt.l1approx) << ',' << fmt(pt.l1a) << "\n";
    }
}

ParsedSweep parse_sweep_csv(std::istream& in) {
    ParsedSweep parsed;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            parsed.comments.push_back(line);
            continue;
        }
        if (!header_seen) {
            if (line != kSweepCsvHeader) {
                throw config_error("sweep csv: unexpected header '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (fields.size() != 9) {
            throw config_error("sweep csv: row with " + std::to_string(fields.size()) +
                               " fields");
        }
        SweepPoint pt{};
        pt.bandwidth = std::stod(fields[0]);
        pt.effective_bandwidth = std::stod(fields[1]);
        pt.slots = 0;
        pt.ucoh = std::stod(fields[2]);
        pt.u1 = std::stod(fields[3]);
        pt.alpha = std::stod(fields[4]);
        pt.alpha_clipped = false;
        if (!trim(fields[5]).empty()) pt.l1 = std::stod(fields[5]);
        pt.l1cf = std::stod(fields[6]);
        pt.l1approx = std::stod(fields[7]);
        pt.l1a = std::stod(fields[8]);
        pt.mi_method = MiMethod::quadrature;
        parsed.points.push_back(pt);
    }
    if (!header_seen) throw config_error("sweep csv: missing header line");
    return parsed;
}

std::map<std::string, std::string> parse_config_file(std::istream& in, const std::string& origin) {
    std::map<std::string, std::string> out;
    std::string line;
    std::string section;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw config_error(origin + ":" + std::to_string(lineno) +
                                   ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) {
                throw config_error(origin + ":" + std::to_string(lineno) + ": empty section name");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        out[section.empty() ? key : section + "." + key] = value;
    }
    return out;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open config file '" + path + "'");
    return parse_config_file(f, path);
}

} // namespace fadecap
