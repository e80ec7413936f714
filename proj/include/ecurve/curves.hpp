#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ecurve/ga.hpp"

namespace ecurve {

/// Sentinel max_order for closed-form models that differentiate to any order.
inline constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

/// A differentiable curve v(t) in n-dimensional signal space. eval(t, k)
/// returns the k-th time derivative (k = 0 is the curve itself) for
/// 0 <= k <= max_order(), t within [t_begin(), t_end()].
///
/// Frames of size m need derivatives up to order m, so a model must expose
/// max_order() >= m for m-vector frame work (the closed-form pipeline uses
/// orders up to 4). Evaluation is const and safe to call concurrently at
/// distinct times once the model is built.
class CurveModel {
public:
    virtual ~CurveModel() = default;

    virtual std::size_t dim() const = 0;
    virtual int max_order() const = 0;
    virtual double t_begin() const = 0;
    virtual double t_end() const = 0;

    /// k-th time derivative of the curve at t.
    virtual VecN eval(double t, int order) const = 0;
};

/// Closed-form model v(t) = cos(wt) a + sin(wt) b for constant vectors a, b.
/// Covers both the balanced and the unbalanced sinusoidal multi-phase
/// signals; the curve is the ellipse spanned by a and b.
class EllipseCurve final : public CurveModel {
public:
    EllipseCurve(VecN a, VecN b, double omega);

    std::size_t dim() const override { return a_.dim(); }
    int max_order() const override { return kUnboundedOrder; }
    double t_begin() const override { return -std::numeric_limits<double>::infinity(); }
    double t_end() const override { return std::numeric_limits<double>::infinity(); }
    VecN eval(double t, int order) const override;

    const VecN& a() const noexcept { return a_; }
    const VecN& b() const noexcept { return b_; }
    double omega() const noexcept { return omega_; }

private:
    VecN a_, b_;
    double omega_;
};

/// Closed-form model where each phase is a finite sum of sinusoidal modes
/// A sin(w t + theta). Derivatives of any order are exact.
class TrigCurve final : public CurveModel {
public:
    struct Mode {
        double amplitude;  // V
        double ang_freq;   // rad/s
        double phase;      // rad
    };

    explicit TrigCurve(std::vector<std::vector<Mode>> phase_modes);

    std::size_t dim() const override { return modes_.size(); }
    int max_order() const override { return kUnboundedOrder; }
    double t_begin() const override { return -std::numeric_limits<double>::infinity(); }
    double t_end() const override { return std::numeric_limits<double>::infinity(); }
    VecN eval(double t, int order) const override;

private:
    std::vector<std::vector<Mode>> modes_;
};

/// Harmonic content shared by all phases of a multi-phase signal: each term
/// contributes sqrt(2) * amplitude * sin(order * (w t - m * step) + phase)
/// to phase m (the per-phase shift enters scaled by the harmonic order).
struct HarmonicSpec {
    struct Term {
        int order;         // harmonic order h >= 1
        double amplitude;  // RMS volts; the generator applies the sqrt(2) peak factor
        double phase;      // rad
    };

    double omega = 0.0;  // base angular frequency, rad/s
    std::vector<Term> terms;
};

/// Uniformly or non-uniformly sampled multi-phase signal.
struct SampledSignal {
    std::vector<double> times;  // seconds, strictly increasing
    std::vector<VecN> values;   // one per time, constant dimension
    double rate = 0.0;          // nominal samples/s (metadata; 0 if unknown)
};

/// Balanced n-phase sinusoid: v(t) = cos(wt) a + sin(wt) b with
/// a = V sum_m cos(2 pi m / n) sigma_{m+1}, b = V sum_m sin(2 pi m / n) sigma_{m+1}.
/// Traces a circle of radius sqrt(n/2) V for n >= 3. Throws DimensionError for
/// n < 2 and DataError for non-positive V or omega.
EllipseCurve balanced_sinusoid(std::size_t n, double V, double omega);

/// Unbalanced n-phase sinusoid: v(t) = cos(wt) a + sin(wt) b with axes
/// a = sum_m V_m cos(phi_m) sigma_m and b = sum_m V_m sin(phi_m) sigma_m,
/// i.e. phase m carries V_m cos(wt - phi_m). With equal amplitudes and
/// phi_m = 2 pi m / n this reduces exactly to balanced_sinusoid. Requires
/// >= 2 nonzero amplitudes and linearly independent a, b (otherwise the
/// ellipse degenerates to a line and DataError is thrown).
EllipseCurve unbalanced_sinusoid(const std::vector<double>& amplitudes,
                                 const std::vector<double>& phases, double omega);

/// n-phase harmonic signal: phase m gets
/// sum_h sqrt(2) A_h sin(h (w t - m step) + phi_h), step in radians.
TrigCurve harmonic_multiphase(const HarmonicSpec& spec, std::size_t n, double step);

/// The bundled three-phase demo spectrum: harmonics (1, 200 V), (2, 20 V),
/// (7, -30 V) at zero phase offsets, phase step 2 pi / 3. Planar: the curve
/// lies in the plane orthogonal to (1,1,1).
HarmonicSpec harmonic437_spec(double omega);

/// Convenience: harmonic_multiphase(harmonic437_spec(omega), 3, 2 pi / 3).
TrigCurve harmonic437_model(double omega);

} // namespace ecurve
