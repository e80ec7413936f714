#include "ecurve/csv.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace ecurve {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

double parse_field(const std::string& raw, const std::string& name, std::size_t line_no) {
    const std::string s = strip(raw);
    if (s.empty()) {
        throw FormatError(name + ": line " + std::to_string(line_no) + ": empty field");
    }
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE) {
        throw FormatError(name + ": line " + std::to_string(line_no) +
                          ": cannot parse number '" + s + "'");
    }
    return x;
}

} // namespace

SampledSignal parse_waveform_csv(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError(name + ": empty file (expected a `t,v1,...,vn` header)");
    }
    // Header: literally t,v1,v2,...,vn.
    const std::vector<std::string> head = split_fields(line);
    if (head.empty() || strip(head[0]) != "t" || head.size() < 3) {
        throw FormatError(name + ": line 1: header must be `t,v1,...,vn` with n >= 2 phases");
    }
    const std::size_t n = head.size() - 1;
    for (std::size_t i = 1; i < head.size(); ++i) {
        if (strip(head[i]) != "v" + std::to_string(i)) {
            throw FormatError(name + ": line 1: header column " + std::to_string(i + 1) +
                              " must be `v" + std::to_string(i) + "`, got `" +
                              strip(head[i]) + "`");
        }
    }

    SampledSignal sig;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;  // tolerate blank lines
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != n + 1) {
            throw DataError(name + ": line " + std::to_string(line_no) + ": expected " +
                            std::to_string(n + 1) + " fields, got " +
                            std::to_string(fields.size()));
        }
        const double t = parse_field(fields[0], name, line_no);
        VecN v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = parse_field(fields[i + 1], name, line_no);
        }
        if (!std::isfinite(t) || !v.all_finite()) {
            throw DataError(name + ": line " + std::to_string(line_no) +
                            ": non-finite value");
        }
        if (!sig.times.empty() && t <= sig.times.back()) {
            throw DataError(name + ": line " + std::to_string(line_no) +
                            ": time column must be strictly increasing");
        }
        sig.times.push_back(t);
        sig.values.push_back(std::move(v));
    }
    if (sig.times.empty()) {
        throw DataError(name + ": no samples after the header");
    }

    // Nominal rate from the median step (robust to a few irregular gaps).
    if (sig.times.size() >= 2) {
        std::vector<double> dts(sig.times.size() - 1);
        for (std::size_t i = 1; i < sig.times.size(); ++i) {
            dts[i - 1] = sig.times[i] - sig.times[i - 1];
        }
        std::nth_element(dts.begin(), dts.begin() + dts.size() / 2, dts.end());
        const double med = dts[dts.size() / 2];
        sig.rate = med > 0.0 ? 1.0 / med : 0.0;
    }
    return sig;
}

SampledSignal parse_waveform_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError(path + ": cannot open file");
    }
    return parse_waveform_csv(in, path);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_waveform_csv(std::ostream& out, const SampledSignal& signal) {
    if (signal.values.empty()) throw DataError("write_waveform_csv: no samples");
    const std::size_t n = signal.values.front().dim();
    out << "t";
    for (std::size_t i = 1; i <= n; ++i) out << ",v" << i;
    out << "\n";
    for (std::size_t r = 0; r < signal.times.size(); ++r) {
        out << format_double(signal.times[r]);
        for (std::size_t i = 0; i < n; ++i) out << ',' << format_double(signal.values[r][i]);
        out << "\n";
    }
}

void write_waveform_csv(const std::string& path, const SampledSignal& signal) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF on every platform
    if (!out) throw FormatError(path + ": cannot open file for writing");
    write_waveform_csv(out, signal);
    out.flush();
    if (!out) throw DataError(path + ": write failed");
}

} // namespace ecurve
