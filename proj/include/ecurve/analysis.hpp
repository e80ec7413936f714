#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ecurve/curves.hpp"
#include "ecurve/darboux.hpp"
#include "ecurve/frames.hpp"

namespace ecurve {

inline constexpr const char* kVersion = "0.1.0";

/// Everything an analysis run needs besides the samples themselves.
struct AnalysisConfig {
    Ortho method = Ortho::MGS;
    int max_order = 4;       ///< derivative order for the frame, 2..4
    double smoothing = 0.0;  ///< spline roughness penalty, >= 0 (0 = interpolate)

    enum class Format { Json, Csv };
    Format format = Format::Json;

    /// Optional averaging window [t0, t1] for the mean angular-velocity
    /// blade; must lie inside the fitted (trimmed) domain.
    std::optional<std::pair<double, double>> window;
    int steps = 1024;  ///< quadrature intervals for the window average (>= 16)
};

struct AnalysisOutput {
    std::string text;            ///< serialized JSON or CSV
    std::size_t samples = 0;     ///< emitted sample records
    std::size_t flagged = 0;     ///< samples flagged (e.g. stationary points)
    double t_begin = 0.0;        ///< analyzed (trimmed) domain
    double t_end = 0.0;
    std::optional<AveragedBivector> average;
};

/// Fit the sampled signal, run the geometric-frequency pipeline at every
/// interior sample time (the two samples nearest each edge fall outside the
/// trimmed fit domain and are skipped), optionally average the
/// angular-velocity blade over a window, and serialize the results.
///
/// JSON output is an array of flat per-sample records, followed by the
/// averaging record (when a window was requested), followed by one trailing
/// metadata object (version, configuration echo, domain). CSV output
/// flattens the Darboux bivector into labeled columns (omega_12, ...) and
/// reports the average and metadata as trailing '#' comment lines.
///
/// Identical input and configuration produce byte-identical output.
AnalysisOutput run_analysis(const SampledSignal& signal, const AnalysisConfig& config);

} // namespace ecurve
