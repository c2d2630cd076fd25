// SPDX-License-Identifier: MIT
#include "fadecap/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace fadecap {

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw config_error(origin + ": " + what);
}

// position the stream at the next data character, dropping '#' comment lines
void skip_comments(std::istream& in) {
    in >> std::ws;
    while (in.peek() == '#') {
        in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        in >> std::ws;
    }
}

// "key=value" token; returns the value part after checking the key.
std::string expect_kv(std::istream& in, const std::string& key, const std::string& origin) {
    skip_comments(in);
    std::string tok;
    if (!(in >> tok)) fail(origin, "missing header field " + key);
    const auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key) {
        fail(origin, "expected header field " + key + "=..., got '" + tok + "'");
    }
    return tok.substr(eq + 1);
}

double parse_double(const std::string& s, const std::string& origin, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(origin, "cannot parse " + what + " from '" + s + "'");
    }
}

long parse_long(const std::string& s, const std::string& origin, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(origin, "cannot parse " + what + " from '" + s + "'");
    }
}

} // namespace

Scattering read_scattering_table(std::istream& in, const std::string& origin) {
    const double nu_max = parse_double(expect_kv(in, "nu_max", origin), origin, "nu_max");
    const double tau_max = parse_double(expect_kv(in, "tau_max", origin), origin, "tau_max");
    const long rows = parse_long(expect_kv(in, "rows", origin), origin, "rows");
    const long cols = parse_long(expect_kv(in, "cols", origin), origin, "cols");
    if (rows < 1 || cols < 1) fail(origin, "rows and cols must be >= 1");
    if (rows > 4096 || cols > 4096) fail(origin, "table larger than 4096 bins per axis");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(rows * cols));
    for (long i = 0; i < rows * cols; ++i) {
        skip_comments(in);
        double v;
        if (!(in >> v)) fail(origin, "truncated table body");
        values.push_back(v);
    }
    try {
        return Scattering::tabulated(nu_max, tau_max, static_cast<int>(rows),
                                     static_cast<int>(cols), std::move(values));
    } catch (const std::invalid_argument& e) {
        fail(origin, e.what());
    }
}

Scattering load_scattering_table(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open scattering table '" + path + "'");
    return read_scattering_table(f, path);
}

void write_complex_matrix(std::ostream& out, const Eigen::MatrixXcd& m) {
    out << "rows=" << m.rows() << " cols=" << m.cols() << "\n";
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(i, j).real(), m(i, j).imag());
            out << buf << (j + 1 < m.cols() ? " " : "");
        }
        out << "\n";
    }
}

Eigen::MatrixXcd read_complex_matrix(std::istream& in, const std::string& origin) {
    const long rows = parse_long(expect_kv(in, "rows", origin), origin, "rows");
    const long cols = parse_long(expect_kv(in, "cols", origin), origin, "cols");
    if (rows < 1 || cols < 1) fail(origin, "rows and cols must be >= 1");
    Eigen::MatrixXcd m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            std::string tok;
            if (!(in >> tok)) fail(origin, "truncated matrix body");
            const auto comma = tok.find(',');
            if (comma == std::string::npos) fail(origin, "entry '" + tok + "' is not re,im");
            const double re = parse_double(tok.substr(0, comma), origin, "matrix entry");
            const double im = parse_double(tok.substr(comma + 1), origin, "matrix entry");
            m(i, j) = cplx(re, im);
        }
    }
    return m;
}

void save_complex_matrix(const std::string& path, const Eigen::MatrixXcd& m) {
    std::ofstream f(path);
    if (!f) throw config_error("cannot open '" + path + "' for writing");
    write_complex_matrix(f, m);
    if (!f.good()) throw config_error("write to '" + path + "' failed");
}

Eigen::MatrixXcd load_complex_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open matrix file '" + path + "'");
    return read_complex_matrix(f, path);
}

} // namespace fadecap
