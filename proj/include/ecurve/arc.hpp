#pragma once

#include <cstddef>
#include <vector>

#include "ecurve/curves.hpp"
#include "ecurve/ga.hpp"

namespace ecurve {

/// Time derivatives of the curve at one instant: d[k-1] = d^k v / dt^k.
struct TDerivStack {
    double t = 0.0;
    std::vector<VecN> d;

    std::size_t order() const noexcept { return d.size(); }
};

/// Evaluate the first m time derivatives of a model at t (m in 1..model
/// max_order). The stack feeds every arc-length computation downstream.
TDerivStack t_derivs(const CurveModel& model, double t, int m);

/// Arc-length data at one instant: sd[k-1] = s^(k) (the k-th time derivative
/// of arc length, so sd[0] = s' = ||v'|| is the curve speed) and
/// sdot[k-1] = d^k v / ds^k (derivatives with respect to arc length).
struct ArcData {
    double t = 0.0;
    std::vector<double> sd;
    std::vector<VecN> sdot;

    double s_prime() const noexcept { return sd[0]; }
    std::size_t order() const noexcept { return sd.size(); }
};

/// First derivatives of arc length s(t), one per available curve derivative
/// (up to four):
///   s'    = sqrt(v'.v')
///   s''   = (v'.v'') / s'
///   s'''  = (v''.v'' + v'.v''' - s''^2) / s'
///   s'''' = (3 v''.v''' + v'.v'''' - 3 s'' s''') / s'
/// Throws RegularityError when s' <= eps_reg (or s' == 0): the curve is
/// momentarily stationary and no frame exists there. eps_reg should be an
/// absolute speed floor, e.g. from regularity_floor().
std::vector<double> arc_speed_derivs(const TDerivStack& td, double eps_reg = 0.0);

/// Arc-length derivatives of the curve from time derivatives, implementing
/// the chain-rule inversion formulas verbatim:
///   dv/ds    = v' / s'
///   d2v/ds2  = (s' v'' - s'' v') / s'^3
///   d3v/ds3  = [s'^2 v''' - 3 s' s'' v'' - (s' s''' - 3 s''^2) v'] / s'^5
///   d4v/ds4  = [s'^3 v'''' - 6 s'^2 s'' v''' - (4 s'^2 s''' - 15 s' s''^2) v''
///               + (10 s' s'' s''' - 15 s''^3 - s'^2 s'''') v'] / s'^7
/// sd must come from arc_speed_derivs on the same stack. The first result has
/// unit norm and is orthogonal to the second (up to rounding).
std::vector<VecN> s_derivs(const TDerivStack& td, const std::vector<double>& sd);

/// Convenience: both stacks at once.
ArcData compute_arc_data(const TDerivStack& td, double eps_reg = 0.0);
ArcData compute_arc_data(const CurveModel& model, double t, int m, double eps_reg = 0.0);

/// Relative regularity floor for an analysis window: 1e-12 times the largest
/// curve speed seen over `probes` uniform samples of [t0, t1]. Using a
/// relative floor keeps the stationarity test meaningful across signals whose
/// voltage scales differ by orders of magnitude.
double regularity_floor(const CurveModel& model, double t0, double t1, int probes = 64);

/// Self-test: evaluates the scalar per-component chain-rule formulas for the
/// first three arc-length derivatives and returns the maximum absolute
/// deviation from the vector-level s_derivs output (which must be
/// algebraically identical). Requires model.max_order() >= 3.
double component_chain_rule_check(const CurveModel& model, double t);

} // namespace ecurve
