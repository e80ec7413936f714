#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "ecurve/csv.hpp"
#include "ecurve/curves.hpp"
#include "ecurve/errors.hpp"

using namespace ecurve;

namespace {

SampledSignal parse_str(const std::string& text) {
    std::istringstream in(text);
    return parse_waveform_csv(in, "test");
}

} // namespace

TEST_CASE("waveform CSV: basic parse") {
    const std::string text =
        "t,v1,v2,v3\n"
        "0,1,0,-1\n"
        "0.001,0.5,0.25,-0.75\n"
        "0.002,-1,2,3\n"
        "0.003,0,0,0\n";
    const SampledSignal sig = parse_str(text);
    REQUIRE(sig.times.size() == 4);
    REQUIRE(sig.values.size() == 4);
    CHECK(sig.values[0].dim() == 3);
    CHECK(sig.times[1] == 0.001);
    CHECK(sig.values[0][0] == 1.0);
    CHECK(sig.values[1][2] == -0.75);
    CHECK(sig.values[2][1] == 2.0);
    // Rate is the reciprocal of the median step.
    CHECK(sig.rate == doctest::Approx(1000.0));
}

TEST_CASE("waveform CSV: tolerated formatting variations") {
    // CRLF line endings, blank lines, spaces around fields.
    const std::string text =
        "t, v1 ,v2\r\n"
        "\r\n"
        "0, 1, 2\r\n"
        "1e-3, 3 ,4\r\n"
        "\n";
    const SampledSignal sig = parse_str(text);
    REQUIRE(sig.times.size() == 2);
    CHECK(sig.values[1][0] == 3.0);
    CHECK(sig.values[1][1] == 4.0);
}

TEST_CASE("waveform CSV: header errors") {
    CHECK_THROWS_AS(parse_str("t,v1\n0,1\n"), FormatError);      // <2 phases
    CHECK_THROWS_AS(parse_str("time,v1,v2\n0,1,2\n"), FormatError);
    CHECK_THROWS_AS(parse_str(""), FormatError);
    try {
        parse_str("bogus\n0,1,2\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("waveform CSV: field and body errors") {
    const std::string head = "t,v1,v2\n";
    // Unparsable field reports its line number.
    try {
        parse_str(head + "0,1,2\n0.001,oops,2\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_str(head + "0,1\n"), DataError);             // ragged row
    CHECK_THROWS_AS(parse_str(head + "0,1,2,3\n"), DataError);         // ragged row
    CHECK_THROWS_AS(parse_str(head + "0,1,2\n0,3,4\n"), DataError);    // repeated time
    CHECK_THROWS_AS(parse_str(head + "0.1,1,2\n0,3,4\n"), DataError);  // decreasing time
    CHECK_THROWS_AS(parse_str(head + "0,1,2\n0.001,nan,4\n"), DataError);
    CHECK_THROWS_AS(parse_str(head), DataError);                       // empty body
    CHECK_THROWS_AS(parse_waveform_csv("/nonexistent/file.csv"), FormatError);
}

TEST_CASE("waveform CSV: write/parse round-trip is bit-exact") {
    SampledSignal sig;
    sig.rate = 12800.0;
    const std::vector<double> awkward = {
        0.1, 1.0 / 3.0, std::nextafter(2.0, 3.0), -7.25e-13, 230.0 * std::sqrt(2.0)};
    for (std::size_t i = 0; i < awkward.size(); ++i) {
        sig.times.push_back(static_cast<double>(i) / 12800.0);
        VecN v(3);
        v[0] = awkward[i];
        v[1] = -awkward[i] * (1.0 + 1e-16);
        v[2] = awkward[(i + 2) % awkward.size()];
        sig.values.push_back(v);
    }

    std::ostringstream out;
    write_waveform_csv(out, sig);
    const SampledSignal back = parse_str(out.str());

    REQUIRE(back.times.size() == sig.times.size());
    for (std::size_t i = 0; i < sig.times.size(); ++i) {
        CHECK(back.times[i] == sig.times[i]);
        for (std::size_t j = 0; j < 3; ++j) CHECK(back.values[i][j] == sig.values[i][j]);
    }

    // Writing the parsed signal again reproduces the bytes.
    std::ostringstream out2;
    write_waveform_csv(out2, back);
    CHECK(out2.str() == out.str());
}

TEST_CASE("format_double survives a parse round-trip") {
    // strtod, not std::stod: stod throws out_of_range for subnormals.
    for (double x : {0.0, -0.0, 1.0, -1.5, 1.0 / 3.0, 6.02214076e23, 5e-324}) {
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}
