#include "ecurve/curves.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace ecurve {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_order(int order, const char* what) {
    if (order < 0) {
        throw UnsupportedError(std::string(what) + ": negative derivative order");
    }
}

} // namespace

EllipseCurve::EllipseCurve(VecN a, VecN b, double omega)
    : a_(std::move(a)), b_(std::move(b)), omega_(omega) {
    if (a_.dim() != b_.dim()) {
        throw DimensionError("EllipseCurve: axes must share a dimension");
    }
    if (!(omega > 0.0)) {
        throw DataError("EllipseCurve: angular frequency must be positive");
    }
}

VecN EllipseCurve::eval(double t, int order) const {
    require_order(order, "EllipseCurve::eval");
    // d^k/dt^k cos(wt) = w^k cos(wt + k pi/2), same shift for sin.
    const double shift = order * kHalfPi;
    const double scale = std::pow(omega_, order);
    const double ca = scale * std::cos(omega_ * t + shift);
    const double cb = scale * std::sin(omega_ * t + shift);
    VecN out(a_.dim());
    for (std::size_t i = 0; i < out.dim(); ++i) {
        out[i] = ca * a_[i] + cb * b_[i];
    }
    return out;
}

TrigCurve::TrigCurve(std::vector<std::vector<Mode>> phase_modes)
    : modes_(std::move(phase_modes)) {
    if (modes_.size() < 2) {
        throw DimensionError("TrigCurve: needs at least 2 phases");
    }
}

VecN TrigCurve::eval(double t, int order) const {
    require_order(order, "TrigCurve::eval");
    const double shift = order * kHalfPi;
    VecN out(modes_.size());
    for (std::size_t m = 0; m < modes_.size(); ++m) {
        double acc = 0.0;
        for (const Mode& md : modes_[m]) {
            acc += md.amplitude * std::pow(md.ang_freq, order) *
                   std::sin(md.ang_freq * t + md.phase + shift);
        }
        out[m] = acc;
    }
    return out;
}

EllipseCurve balanced_sinusoid(std::size_t n, double V, double omega) {
    if (n < 2) {
        throw DimensionError("balanced_sinusoid: phase count must be >= 2 "
                             "(a single phase traces a line, not a curve)");
    }
    if (!(V > 0.0)) throw DataError("balanced_sinusoid: amplitude must be positive");
    if (!(omega > 0.0)) throw DataError("balanced_sinusoid: angular frequency must be positive");
    VecN a(n), b(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        a[m] = V * std::cos(ang);
        b[m] = V * std::sin(ang);
    }
    return EllipseCurve(std::move(a), std::move(b), omega);
}

EllipseCurve unbalanced_sinusoid(const std::vector<double>& amplitudes,
                                 const std::vector<double>& phases, double omega) {
    const std::size_t n = amplitudes.size();
    if (n < 2) throw DimensionError("unbalanced_sinusoid: needs >= 2 phases");
    if (phases.size() != n) {
        throw DimensionError("unbalanced_sinusoid: amplitude/phase lists differ in length");
    }
    std::size_t nonzero = 0;
    for (double V : amplitudes) {
        if (V < 0.0) throw DataError("unbalanced_sinusoid: amplitudes must be >= 0");
        if (V > 0.0) ++nonzero;
    }
    if (nonzero < 2) {
        throw DataError("unbalanced_sinusoid: needs at least two nonzero amplitudes");
    }
    VecN a(n), b(n);
    for (std::size_t m = 0; m < n; ++m) {
        a[m] = amplitudes[m] * std::cos(phases[m]);
        b[m] = amplitudes[m] * std::sin(phases[m]);
    }
    // The curve is an ellipse only if a and b span a plane.
    const double area = norm_bivec(wedge(a, b));
    if (area <= 1e-12 * norm_vec(a) * norm_vec(b) || area == 0.0) {
        throw DataError("unbalanced_sinusoid: axes are (numerically) collinear, "
                        "the ellipse degenerates to a line");
    }
    return EllipseCurve(std::move(a), std::move(b), omega);
}

TrigCurve harmonic_multiphase(const HarmonicSpec& spec, std::size_t n, double step) {
    if (spec.terms.empty()) throw DataError("harmonic_multiphase: empty harmonic list");
    if (!(spec.omega > 0.0)) {
        throw DataError("harmonic_multiphase: base angular frequency must be positive");
    }
    if (n < 2) throw DimensionError("harmonic_multiphase: needs >= 2 phases");
    for (const auto& term : spec.terms) {
        if (term.order < 1) throw DataError("harmonic_multiphase: harmonic orders must be >= 1");
        if (!std::isfinite(term.amplitude)) {
            throw DataError("harmonic_multiphase: non-finite amplitude");
        }
    }
    std::vector<std::vector<TrigCurve::Mode>> modes(n);
    const double sqrt2 = std::numbers::sqrt2;
    for (std::size_t m = 0; m < n; ++m) {
        for (const auto& term : spec.terms) {
            const double h = static_cast<double>(term.order);
            // sqrt(2) A sin(h (w t - m step) + phi) as a single mode in t.
            modes[m].push_back({sqrt2 * term.amplitude, h * spec.omega,
                                term.phase - h * static_cast<double>(m) * step});
        }
    }
    return TrigCurve(std::move(modes));
}

HarmonicSpec harmonic437_spec(double omega) {
    HarmonicSpec spec;
    spec.omega = omega;
    spec.terms = {{1, 200.0, 0.0}, {2, 20.0, 0.0}, {7, -30.0, 0.0}};
    return spec;
}

TrigCurve harmonic437_model(double omega) {
    return harmonic_multiphase(harmonic437_spec(omega), 3, 2.0 * std::numbers::pi / 3.0);
}

} // namespace ecurve
