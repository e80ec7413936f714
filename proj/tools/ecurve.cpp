// Command-line front end: synthetic multi-phase waveform generation, CSV
// analysis (geometric-frequency pipeline), and the built-in validation suite.
//
// Exit codes: 0 success (including analyses with flagged samples);
//             1 validation failures;
//             2 unreadable or unusable input / invalid configuration;
//             CLI11's own codes for command-line usage errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecurve/analysis.hpp"
#include "ecurve/csv.hpp"
#include "ecurve/curves.hpp"
#include "ecurve/errors.hpp"
#include "ecurve/validate.hpp"

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct GenerateOptions {
    std::string model;
    std::size_t phases = 3;
    double amp = 1.0;                    // balanced amplitude, V
    std::vector<double> amps;            // unbalanced amplitudes, V
    std::vector<double> phis;            // unbalanced phase offsets, degrees
    std::string harmonics;               // "order:amplitude:phaseDeg,..."
    double freq = 50.0;                  // Hz
    double rate = 12800.0;               // samples/s
    double cycles = 3.0;
    std::string out;                     // empty = stdout
};

struct AnalyzeOptions {
    std::string input;
    std::string ortho = "mgs";
    int max_order = 4;
    double smoothing = 0.0;
    std::string format = "json";
    std::string window;                  // "t0:t1" or "one-cycle"
    std::optional<double> freq;          // Hz, for one-cycle windows
    int steps_per_cycle = 1024;
    std::optional<int> steps;            // explicit total quadrature intervals
    std::string out;                     // empty = stdout
};

std::vector<ecurve::HarmonicSpec::Term> parse_harmonic_terms(const std::string& text) {
    std::vector<ecurve::HarmonicSpec::Term> terms;
    std::stringstream list(text);
    std::string item;
    while (std::getline(list, item, ',')) {
        std::stringstream fields(item);
        std::string f0, f1, f2;
        if (!std::getline(fields, f0, ':') || !std::getline(fields, f1, ':') ||
            !std::getline(fields, f2)) {
            throw ecurve::FormatError("--harmonics entry '" + item +
                                      "' is not order:amplitude:phaseDeg");
        }
        ecurve::HarmonicSpec::Term term;
        try {
            term.order = std::stoi(f0);
            term.amplitude = std::stod(f1);
            term.phase = std::stod(f2) * kDegToRad;
        } catch (const std::exception&) {
            throw ecurve::FormatError("--harmonics entry '" + item +
                                      "' has a non-numeric field");
        }
        if (term.order < 1) {
            throw ecurve::FormatError("--harmonics orders must be >= 1");
        }
        terms.push_back(term);
    }
    if (terms.empty()) throw ecurve::FormatError("--harmonics is empty");
    return terms;
}

std::unique_ptr<ecurve::CurveModel> build_model(const GenerateOptions& opt, double omega) {
    if (opt.model == "balanced") {
        return std::make_unique<ecurve::EllipseCurve>(
            ecurve::balanced_sinusoid(opt.phases, opt.amp, omega));
    }
    if (opt.model == "unbalanced") {
        if (opt.amps.empty()) {
            throw ecurve::DataError("--model unbalanced requires --amps");
        }
        std::vector<double> phis_rad;
        if (opt.phis.empty()) {
            for (std::size_t m = 0; m < opt.amps.size(); ++m) {
                phis_rad.push_back(2.0 * std::numbers::pi * static_cast<double>(m) /
                                   static_cast<double>(opt.amps.size()));
            }
        } else {
            for (double deg : opt.phis) phis_rad.push_back(deg * kDegToRad);
        }
        return std::make_unique<ecurve::EllipseCurve>(
            ecurve::unbalanced_sinusoid(opt.amps, phis_rad, omega));
    }
    if (opt.model == "harmonic") {
        if (opt.harmonics.empty()) {
            throw ecurve::DataError("--model harmonic requires --harmonics");
        }
        ecurve::HarmonicSpec spec;
        spec.omega = omega;
        spec.terms = parse_harmonic_terms(opt.harmonics);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(opt.phases);
        return std::make_unique<ecurve::TrigCurve>(
            ecurve::harmonic_multiphase(spec, opt.phases, step));
    }
    if (opt.model == "harmonic437") {
        return std::make_unique<ecurve::TrigCurve>(ecurve::harmonic437_model(omega));
    }
    throw ecurve::DataError("unknown --model '" + opt.model +
                            "' (expected balanced|unbalanced|harmonic|harmonic437)");
}

int cmd_generate(const GenerateOptions& opt) {
    if (opt.freq <= 0.0 || opt.rate <= 0.0 || opt.cycles <= 0.0) {
        std::cerr << "error: --freq, --rate and --cycles must be positive\n";
        return 2;
    }
    const double omega = 2.0 * std::numbers::pi * opt.freq;
    const auto model = build_model(opt, omega);

    const auto rows = static_cast<std::size_t>(std::llround(opt.rate * opt.cycles / opt.freq));
    if (rows < 2) {
        std::cerr << "error: requested duration yields fewer than 2 samples\n";
        return 2;
    }
    ecurve::SampledSignal sig;
    sig.rate = opt.rate;
    sig.times.reserve(rows);
    sig.values.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const double t = static_cast<double>(i) / opt.rate;
        sig.times.push_back(t);
        sig.values.push_back(model->eval(t, 0));
    }

    if (opt.out.empty()) {
        ecurve::write_waveform_csv(std::cout, sig);
    } else {
        ecurve::write_waveform_csv(opt.out, sig);
    }
    return 0;
}

int cmd_analyze(const AnalyzeOptions& opt) {
    ecurve::SampledSignal sig;
    try {
        sig = ecurve::parse_waveform_csv(opt.input);
    } catch (const ecurve::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    ecurve::AnalysisConfig cfg;
    cfg.method = opt.ortho == "cgs"   ? ecurve::Ortho::CGS
                 : opt.ortho == "gags" ? ecurve::Ortho::GAGS
                                       : ecurve::Ortho::MGS;
    cfg.max_order = opt.max_order;
    cfg.smoothing = opt.smoothing;
    cfg.format = opt.format == "csv" ? ecurve::AnalysisConfig::Format::Csv
                                     : ecurve::AnalysisConfig::Format::Json;

    try {
        double window_span = 0.0;
        if (!opt.window.empty()) {
            if (opt.window == "one-cycle") {
                if (!opt.freq) {
                    std::cerr << "error: --window one-cycle requires --freq\n";
                    return 2;
                }
                if (sig.times.size() < 6) {
                    throw ecurve::DataError("too few samples for a one-cycle window");
                }
                const double t0 = sig.times[2];  // first interior sample
                cfg.window = {t0, t0 + 1.0 / *opt.freq};
            } else {
                const auto colon = opt.window.find(':');
                if (colon == std::string::npos) {
                    std::cerr << "error: --window must be t0:t1 or one-cycle\n";
                    return 2;
                }
                try {
                    cfg.window = {std::stod(opt.window.substr(0, colon)),
                                  std::stod(opt.window.substr(colon + 1))};
                } catch (const std::exception&) {
                    std::cerr << "error: --window bounds are not numeric\n";
                    return 2;
                }
            }
            window_span = cfg.window->second - cfg.window->first;
        }

        if (opt.steps) {
            cfg.steps = *opt.steps;
        } else if (opt.freq && window_span > 0.0) {
            cfg.steps = std::max(16, static_cast<int>(std::llround(
                                         opt.steps_per_cycle * window_span * *opt.freq)));
        } else {
            cfg.steps = opt.steps_per_cycle;
        }

        const ecurve::AnalysisOutput result = ecurve::run_analysis(sig, cfg);

        if (opt.out.empty()) {
            std::cout << result.text;
        } else {
            std::ofstream out(opt.out, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open output file '" << opt.out << "'\n";
                return 2;
            }
            out << result.text;
        }
        if (result.flagged > 0) {
            std::cerr << "note: " << result.flagged << " of " << result.samples
                      << " samples flagged (see their 'flags' field)\n";
        }
        return 0;
    } catch (const ecurve::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_validate(const std::string& only) {
    const std::vector<ecurve::CriterionResult> results = ecurve::run_validation(only);
    if (results.empty()) {
        std::cerr << "error: no validation criterion matches '" << only << "'\n";
        return 2;
    }
    bool all_pass = true;
    for (const ecurve::CriterionResult& r : results) {
        std::cout << ecurve::format_criterion(r) << "\n";
        all_pass = all_pass && r.passed;
    }
    std::cout << (all_pass ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Geometric-frequency analyzer: treats an n-phase waveform as a curve in "
        "n-dimensional space and reports its frame curvatures and angular-velocity "
        "(Darboux) bivector."};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "Write a synthetic multi-phase waveform CSV");
    generate->add_option("--model", gen.model, "balanced|unbalanced|harmonic|harmonic437")
        ->required();
    generate->add_option("--phases", gen.phases, "number of phases (default 3)");
    generate->add_option("--amp", gen.amp, "balanced amplitude, V (default 1)");
    generate->add_option("--amps", gen.amps, "per-phase amplitudes, V (comma separated)")
        ->delimiter(',');
    generate->add_option("--phis", gen.phis, "per-phase offsets, degrees (comma separated)")
        ->delimiter(',');
    generate->add_option("--harmonics", gen.harmonics,
                         "harmonic terms order:amplitudeRMS:phaseDeg[,...]");
    generate->add_option("--freq", gen.freq, "fundamental frequency, Hz (default 50)");
    generate->add_option("--rate", gen.rate, "sample rate, samples/s (default 12800)");
    generate->add_option("--cycles", gen.cycles, "duration in fundamental cycles (default 3)");
    generate->add_option("--out", gen.out, "output CSV path (default: stdout)");

    AnalyzeOptions ana;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Run the geometric-frequency pipeline over a waveform CSV");
    analyze->add_option("input", ana.input, "waveform CSV (header t,v1,...,vn)")->required();
    analyze->add_option("--ortho", ana.ortho, "orthogonalizer: cgs|mgs|gags (default mgs)")
        ->check(CLI::IsMember({"cgs", "mgs", "gags"}));
    analyze->add_option("--max-order", ana.max_order, "frame derivative order 2..4 (default 4)")
        ->check(CLI::Range(2, 4));
    analyze->add_option("--smoothing", ana.smoothing,
                        "spline roughness penalty, >= 0 (default 0 = interpolate)")
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--format", ana.format, "output format: json|csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--window", ana.window,
                        "averaging window 't0:t1' (seconds) or 'one-cycle'");
    double freq_opt = 0.0;
    CLI::Option* freq_flag =
        analyze->add_option("--freq", freq_opt, "fundamental frequency hint, Hz");
    analyze->add_option("--steps-per-cycle", ana.steps_per_cycle,
                        "quadrature intervals per cycle for averaging (default 1024)");
    int steps_opt = 0;
    CLI::Option* steps_flag = analyze->add_option(
        "--steps", steps_opt, "total quadrature intervals for the window (overrides per-cycle)");
    analyze->add_option("--out", ana.out, "output path (default: stdout)");

    std::string only;
    CLI::App* validate = app.add_subcommand(
        "validate", "Run the built-in numerical validation suite");
    validate->add_option("--only", only, "run only criteria whose id or name matches");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (analyze->parsed()) {
            if (*freq_flag) ana.freq = freq_opt;
            if (*steps_flag) ana.steps = steps_opt;
            return cmd_analyze(ana);
        }
        if (validate->parsed()) return cmd_validate(only);
    } catch (const ecurve::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
