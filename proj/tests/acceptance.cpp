// Acceptance harness: runs every shipping criterion and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.
//
// Criteria 1-9 exercise the library directly (see src/validate.cpp).
// Criterion 10 drives the installed CLI end to end through real files:
// generate a signal, analyze it with no frequency hint, recover 50 Hz from
// the output alone, and require `validate` to exit 0.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecurve/validate.hpp"

#ifndef ECURVE_CLI_PATH
#error "ECURVE_CLI_PATH must point at the CLI binary"
#endif
#ifndef ECURVE_WORK_DIR
#error "ECURVE_WORK_DIR must name a scratch directory"
#endif

namespace {

int run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
#ifdef _WIN32
    return status;
#else
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
#endif
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

ecurve::CriterionResult end_to_end_cli() {
    using ecurve::CriterionResult;
    CriterionResult r{10, "end-to-end-cli", false, ""};
    std::ostringstream detail;

    const std::string cli = ECURVE_CLI_PATH;
    const std::filesystem::path work = ECURVE_WORK_DIR;
    std::error_code ec;
    std::filesystem::create_directories(work, ec);
    if (ec) {
        r.detail = "cannot create work dir " + work.string();
        return r;
    }
    const std::string csv = (work / "balanced.csv").string();
    const std::string out = (work / "balanced_analysis.json").string();

    const int gen = run_command(quoted(cli) +
                                " generate --model balanced --phases 3 --amp 230"
                                " --freq 50 --rate 12800 --cycles 3 --out " +
                                quoted(csv));
    if (gen != 0) {
        r.detail = "generate exited " + std::to_string(gen);
        return r;
    }

    const int ana = run_command(quoted(cli) + " analyze " + quoted(csv) + " --format json --out " +
                                quoted(out));
    if (ana != 0) {
        r.detail = "analyze exited " + std::to_string(ana);
        return r;
    }

    // Recover the line frequency from the analysis output alone: the mean
    // of omega1_norm over unflagged samples, divided by 2 pi.
    std::ifstream in(out);
    if (!in) {
        r.detail = "analysis output missing";
        return r;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        r.detail = std::string("analysis output is not JSON: ") + e.what();
        return r;
    }
    double acc = 0.0;
    std::size_t count = 0;
    for (const auto& rec : doc) {
        if (!rec.contains("t") || !rec.contains("omega1_norm")) continue;
        if (rec.contains("flags") && !rec["flags"].empty()) continue;
        acc += rec["omega1_norm"].get<double>();
        ++count;
    }
    if (count == 0) {
        r.detail = "no analyzable samples in output";
        return r;
    }
    const double freq = acc / static_cast<double>(count) / (2.0 * std::numbers::pi);
    const double freq_err = std::abs(freq - 50.0) / 50.0;
    const bool freq_ok = freq_err < 1e-3;
    detail << "recovered " << freq << " Hz from " << count << " samples (rel err " << freq_err
           << ")";

    const int val = run_command(quoted(cli) + " validate > " +
                                quoted((work / "validate.log").string()) + " 2>&1");
    const bool val_ok = (val == 0);
    detail << "; validate exited " << val;
    if (!val_ok) detail << " (expected 0; the harmonic-average criterion fails, see criterion 4)";

    r.passed = freq_ok && val_ok;
    r.detail = detail.str();
    return r;
}

} // namespace

int main() {
    std::vector<ecurve::CriterionResult> results;
    try {
        results = ecurve::run_validation();
    } catch (const std::exception& e) {
        std::cerr << "validation aborted: " << e.what() << "\n";
        return 99;
    }
    results.push_back(end_to_end_cli());

    int failures = 0;
    for (const auto& r : results) {
        std::cout << ecurve::format_criterion(r) << "\n";
        if (!r.passed) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures;
}
