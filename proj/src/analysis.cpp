#include "ecurve/analysis.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ecurve/csv.hpp"
#include "ecurve/spline.hpp"

namespace ecurve {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* method_name(Ortho m) {
    switch (m) {
        case Ortho::CGS: return "cgs";
        case Ortho::MGS: return "mgs";
        case Ortho::GAGS: return "gags";
    }
    return "?";
}

// Column-style label for CSV: omega_12 (1-based pair), omega_10_12 above 9 phases.
std::string csv_pair_label(const BivecN& b, std::size_t idx, const std::string& prefix) {
    const auto [i, j] = b.pair_at(idx);
    if (b.dim() <= 9) {
        return prefix + "_" + std::to_string(i + 1) + std::to_string(j + 1);
    }
    return prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

ordered_json bivec_to_json(const BivecN& b) {
    ordered_json out = ordered_json::object();
    for (std::size_t idx = 0; idx < b.size(); ++idx) {
        out[bivec_basis_label(b, idx)] = b[idx];
    }
    return out;
}

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (i) out += ';';
        out += flags[i];
    }
    return out;
}

std::string serialize_json(const std::vector<GeomFreqSample>& series,
                           const AnalysisConfig& cfg, const SplineCurve& fit,
                           const std::optional<AveragedBivector>& avg,
                           std::size_t flagged, std::size_t input_samples) {
    ordered_json arr = ordered_json::array();
    for (const GeomFreqSample& s : series) {
        ordered_json rec;
        rec["t"] = s.t;
        rec["s_prime"] = s.s_prime;
        rec["m"] = s.m;
        rec["k"] = s.k;
        rec["omega1_norm"] = s.omega1_norm;
        rec["planar_residual"] = s.planar_residual;
        rec["omega"] = bivec_to_json(s.omega);
        rec["omega1"] = bivec_to_json(s.omega1);
        rec["flags"] = s.flags;
        arr.push_back(std::move(rec));
    }
    if (avg) {
        ordered_json rec;
        rec["window"] = {avg->t0, avg->t1};
        rec["steps"] = avg->steps;
        rec["mean"] = bivec_to_json(avg->mean);
        rec["mean_norm"] = avg->mean_norm;
        arr.push_back(std::move(rec));
    }
    ordered_json meta;
    meta["version"] = kVersion;
    meta["phases"] = fit.dim();
    meta["input_samples"] = input_samples;
    meta["analyzed_samples"] = series.size();
    meta["flagged_samples"] = flagged;
    meta["domain"] = {fit.t_begin(), fit.t_end()};
    meta["edge_samples_trimmed"] = 2;
    meta["config"] = {{"ortho", method_name(cfg.method)},
                      {"max_order", cfg.max_order},
                      {"smoothing", cfg.smoothing},
                      {"format", cfg.format == AnalysisConfig::Format::Json ? "json" : "csv"},
                      {"steps", cfg.steps}};
    if (cfg.window) {
        meta["config"]["window"] = {cfg.window->first, cfg.window->second};
    }
    arr.push_back(std::move(meta));
    return arr.dump(2) + "\n";
}

std::string serialize_csv(const std::vector<GeomFreqSample>& series,
                          const AnalysisConfig& cfg, const SplineCurve& fit,
                          const std::optional<AveragedBivector>& avg,
                          std::size_t flagged, std::size_t input_samples) {
    std::ostringstream out;
    const std::size_t n_k = static_cast<std::size_t>(cfg.max_order) - 1;
    const BivecN proto(fit.dim());

    out << "t,s_prime,m";
    for (std::size_t i = 1; i <= n_k; ++i) out << ",k" << i;
    out << ",omega1_norm,planar_residual";
    for (std::size_t idx = 0; idx < proto.size(); ++idx) {
        out << ',' << csv_pair_label(proto, idx, "omega");
    }
    for (std::size_t idx = 0; idx < proto.size(); ++idx) {
        out << ',' << csv_pair_label(proto, idx, "omega1");
    }
    out << ",flags\n";

    for (const GeomFreqSample& s : series) {
        out << format_double(s.t) << ',' << format_double(s.s_prime) << ',' << s.m;
        for (std::size_t i = 0; i < n_k; ++i) {
            out << ',';
            if (i < s.k.size()) out << format_double(s.k[i]);
        }
        out << ',' << format_double(s.omega1_norm) << ','
            << format_double(s.planar_residual);
        for (std::size_t idx = 0; idx < s.omega.size(); ++idx) {
            out << ',' << format_double(s.omega[idx]);
        }
        for (std::size_t idx = 0; idx < s.omega1.size(); ++idx) {
            out << ',' << format_double(s.omega1[idx]);
        }
        out << ',' << join_flags(s.flags) << "\n";
    }

    if (avg) {
        out << "# average_window = [" << format_double(avg->t0) << ", "
            << format_double(avg->t1) << "]\n";
        out << "# average_steps = " << avg->steps << "\n";
        for (std::size_t idx = 0; idx < avg->mean.size(); ++idx) {
            out << "# average_" << csv_pair_label(avg->mean, idx, "omega") << " = "
                << format_double(avg->mean[idx]) << "\n";
        }
        out << "# average_mean_norm = " << format_double(avg->mean_norm) << "\n";
    }
    out << "# version = " << kVersion << "\n";
    out << "# phases = " << fit.dim() << "\n";
    out << "# input_samples = " << input_samples << "\n";
    out << "# analyzed_samples = " << series.size() << "\n";
    out << "# flagged_samples = " << flagged << "\n";
    out << "# domain = [" << format_double(fit.t_begin()) << ", "
        << format_double(fit.t_end()) << "]\n";
    out << "# edge_samples_trimmed = 2\n";
    out << "# config = ortho:" << method_name(cfg.method) << " max_order:" << cfg.max_order
        << " smoothing:" << format_double(cfg.smoothing) << "\n";
    return out.str();
}

} // namespace

AnalysisOutput run_analysis(const SampledSignal& signal, const AnalysisConfig& config) {
    if (config.max_order < 2 || config.max_order > 4) {
        throw UnsupportedError("run_analysis: max_order must be within 2..4");
    }
    if (!(config.smoothing >= 0.0)) {
        throw DataError("run_analysis: smoothing must be >= 0");
    }
    if (config.window && config.steps < 16) {
        throw DataError("run_analysis: averaging needs at least 16 quadrature steps");
    }

    const SplineCurve fit = fit_sampled(signal, config.smoothing);

    // Interior samples: input times that fall inside the trimmed fit domain.
    std::vector<double> times;
    times.reserve(signal.times.size());
    for (double t : signal.times) {
        if (t >= fit.t_begin() && t <= fit.t_end()) times.push_back(t);
    }

    const std::vector<GeomFreqSample> series =
        geometric_frequency_series(fit, times, config.method, config.max_order);

    std::size_t flagged = 0;
    for (const GeomFreqSample& s : series) {
        if (!s.ok()) ++flagged;
    }

    std::optional<AveragedBivector> avg;
    if (config.window) {
        const auto [w0, w1] = *config.window;
        if (w0 < fit.t_begin() - 1e-12 || w1 > fit.t_end() + 1e-12 || !(w1 > w0)) {
            throw DomainError("run_analysis: averaging window [" + std::to_string(w0) +
                              ", " + std::to_string(w1) +
                              "] must lie inside the fitted domain [" +
                              std::to_string(fit.t_begin()) + ", " +
                              std::to_string(fit.t_end()) + "]");
        }
        avg = average_bivector(fit, w0, w1, config.steps);
    }

    AnalysisOutput out;
    out.samples = series.size();
    out.flagged = flagged;
    out.t_begin = fit.t_begin();
    out.t_end = fit.t_end();
    out.average = avg;
    out.text = (config.format == AnalysisConfig::Format::Json)
                   ? serialize_json(series, config, fit, avg, flagged, signal.times.size())
                   : serialize_csv(series, config, fit, avg, flagged, signal.times.size());
    return out;
}

} // namespace ecurve
