#pragma once

#include <cstddef>
#include <vector>

#include "ecurve/curves.hpp"

namespace ecurve {

/// A single scalar quintic (degree-5) B-spline function on a clamped knot
/// vector: f(x) = sum_j c_j B_j(x). Degree 5 is the lowest degree whose
/// 4th derivative is still continuous, which the frame pipeline requires.
class QuinticSpline {
public:
    static constexpr int kDegree = 5;

    QuinticSpline(std::vector<double> knots, std::vector<double> coefs);

    /// Value (order 0) or derivative (order 1..5) at x. Orders above 5 are
    /// identically zero. x outside the knot range evaluates the polynomial
    /// extension of the end span.
    double eval(double x, int order) const;

    double x_min() const noexcept { return knots_[kDegree]; }
    double x_max() const noexcept { return knots_[knots_.size() - kDegree - 1]; }

    std::size_t basis_size() const noexcept { return coefs_.size(); }

private:
    std::vector<double> knots_;
    std::vector<double> coefs_;
};

/// CurveModel backed by one fitted quintic spline per phase. The usable
/// domain is the sample span trimmed by two samples at each edge, where
/// spline end-effects would otherwise contaminate derivatives.
class SplineCurve final : public CurveModel {
public:
    SplineCurve(std::vector<QuinticSpline> phases, double t_lo, double t_hi);

    std::size_t dim() const override { return phases_.size(); }
    int max_order() const override { return 4; }
    double t_begin() const override { return lo_; }
    double t_end() const override { return hi_; }

    /// Throws DomainError outside the trimmed domain and UnsupportedError
    /// for orders above 4.
    VecN eval(double t, int order) const override;

    const QuinticSpline& phase(std::size_t i) const { return phases_[i]; }

private:
    std::vector<QuinticSpline> phases_;
    double lo_, hi_;
};

/// Fit one quintic spline per phase to a sampled signal and wrap them as a
/// differentiable CurveModel.
///
/// smoothing == 0 selects an interpolating spline (the fit passes through
/// every sample); smoothing > 0 selects a penalized least-squares fit
/// minimizing sum_k |f(t_k) - y_k|^2 + smoothing * integral |f'''(t)|^2 dt,
/// so the parameter carries units of s^5 when t is in seconds. No automatic
/// smoothing selection is performed.
///
/// Requires at least 8 samples with strictly increasing times; throws
/// DataError otherwise (duplicate times included).
SplineCurve fit_sampled(const SampledSignal& signal, double smoothing);

} // namespace ecurve
