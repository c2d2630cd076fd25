// SPDX-License-Identifier: MIT
#include <cmath>
#include <sstream>

#include <doctest.h>

#include "fadecap/bounds.hpp"
#include "fadecap/sweep_io.hpp"
#include "fadecap/table_io.hpp"

using namespace fadecap;

TEST_CASE("scattering table round trip") {
    std::istringstream in(
        "# comment line\n"
        "nu_max=4 tau_max=0.02 rows=2 cols=3\n"
        "1 2 3\n"
        "0 1 0.5\n");
    const Scattering sf = read_scattering_table(in, "unit");
    CHECK(sf.shape() == ScatteringShape::tabulated);
    CHECK(sf.nu_max() == 4.0);
    CHECK(sf.tau_max() == 0.02);
    CHECK(sf.rows() == 2);
    CHECK(sf.cols() == 3);
    // normalized to unit volume
    const double cell = 2.0 * 4.0 * 2.0 * 0.02 / 6.0; // area per cell
    double vol = 0;
    for (double v : sf.cell_values()) vol += v * cell;
    CHECK(vol == doctest::Approx(1.0).epsilon(1e-12));
    // relative weights preserved
    CHECK(sf.cell_values()[1] == doctest::Approx(2.0 * sf.cell_values()[0]).epsilon(1e-12));
}

TEST_CASE("scattering table rejects malformed input") {
    const char* cases[] = {
        "",                                             // no header
        "nu_max=1 tau_max=1 rows=2 cols=2\n1 2\n",      // short body
        "nu_max=1 tau_max=1 rows=1 cols=2\n1 -2\n",     // negative cell
        "nu_max=0 tau_max=1 rows=1 cols=1\n1\n",        // bad support
        "nu_max=1 tau_max=1 rows=1 cols=9999999\n1\n",  // oversized axis
        "nu_max=1 rows=1 cols=1\n1\n",                  // missing key
        "nu_max=1 tau_max=1 rows=1 cols=1\n0\n",        // all-zero table
    };
    for (const char* text : cases) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_scattering_table(in, "unit"), config_error);
    }
}

TEST_CASE("complex matrix round trip keeps every bit") {
    Eigen::MatrixXcd m(2, 3);
    m << cplx(1.0, -2.0), cplx(0.1, 0.25), cplx(-3.5e-17, 1e300), cplx(0, 0),
        cplx(1.0 / 3.0, -1.0 / 7.0), cplx(7.234e-301, -1.0);
    std::ostringstream out;
    write_complex_matrix(out, m);
    std::istringstream in(out.str());
    const Eigen::MatrixXcd back = read_complex_matrix(in, "unit");
    REQUIRE(back.rows() == 2);
    REQUIRE(back.cols() == 3);
    CHECK(back == m);
}

TEST_CASE("complex matrix rejects malformed input") {
    for (const char* text :
         {"", "rows=2 cols=1\n1,0\n", "rows=1 cols=1\nnonsense\n", "rows=1 cols=2\n1,0\n"}) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_complex_matrix(in, "unit"), config_error);
    }
}

TEST_CASE("config file sections flatten to dotted keys") {
    std::istringstream in(
        "top = 1\n"
        "# a comment\n"
        "[scenario]\n"
        "shape = brick   # trailing comment\n"
        "nu_max = 5\n"
        "\n"
        "[sweep]\n"
        "points=60\n");
    const auto kv = parse_config_file(in, "unit");
    CHECK(kv.at("top") == "1");
    CHECK(kv.at("scenario.shape") == "brick");
    CHECK(kv.at("scenario.nu_max") == "5");
    CHECK(kv.at("sweep.points") == "60");
    CHECK(kv.size() == 4);
}

TEST_CASE("config file rejects bad lines") {
    for (const char* text : {"not a key value\n", "[unclosed\nk = v\n", "= 3\n"}) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_config_file(in, "unit"), config_error);
    }
}

TEST_CASE("sweep csv writes the pinned header and parses back") {
    SweepResult res;
    SweepPoint a{};
    a.bandwidth = 1e5;
    a.effective_bandwidth = 98840.0;
    a.slots = 28;
    a.ucoh = 123.456;
    a.u1 = 100.0 / 3.0;
    a.alpha = 1.0;
    a.l1 = 31.25;
    a.l1cf = 31.0;
    a.l1approx = 32.0;
    a.l1a = 30.0;
    SweepPoint b = a;
    b.bandwidth = 2e5;
    b.slots = 56;
    b.l1.reset(); // not computed: empty field
    res.points = {a, b};

    std::ostringstream out;
    write_sweep_csv(out, res, {{"scenario.shape", "brick"}});
    const std::string text = out.str();
    CHECK(text.find("# scenario.shape = brick\n") != std::string::npos);
    CHECK(text.find(kSweepCsvHeader) != std::string::npos);

    std::istringstream in(text);
    const ParsedSweep parsed = parse_sweep_csv(in);
    REQUIRE(parsed.points.size() == 2);
    CHECK(parsed.points[0].l1.has_value());
    CHECK(*parsed.points[0].l1 == doctest::Approx(31.25).epsilon(1e-12));
    CHECK(!parsed.points[1].l1.has_value());
    CHECK(parsed.points[0].u1 == doctest::Approx(100.0 / 3.0).epsilon(1e-11));
    CHECK(parsed.points[1].bandwidth == doctest::Approx(2e5).epsilon(1e-12));
    REQUIRE(!parsed.comments.empty());
}

TEST_CASE("sweep csv parser rejects wrong headers") {
    std::istringstream wrong("bandwidth_hz,u1\n1,2\n");
    CHECK_THROWS_AS(parse_sweep_csv(wrong), config_error);
    std::istringstream short_row(std::string(kSweepCsvHeader) + "\n1,2,3\n");
    CHECK_THROWS_AS(parse_sweep_csv(short_row), config_error);
}
