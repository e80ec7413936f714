#pragma once

#include <cstddef>
#include <utility>

#include "ecurve/ga.hpp"

namespace ecurve::reference {

/// Closed-form reference values for the built-in demo signals. These are
/// derived independently of the numerical pipeline (direct trigonometric
/// algebra on the signal definitions) and exist so the validation suite and
/// tests can compare the pipeline against known answers.

/// Axes of the balanced n-phase sinusoid, a_m = V cos(2 pi m / n),
/// b_m = V sin(2 pi m / n). Orthogonal, each with squared norm n V^2 / 2.
std::pair<VecN, VecN> balanced_axes(std::size_t n, double V);

/// Curve speed of the balanced signal: s' = (omega / sqrt(2)) sqrt(n) V.
double balanced_speed(std::size_t n, double V, double omega);

/// Angular-velocity blade of the balanced signal (constant in time):
/// Omega_1 = 2 omega / (n V^2) a ^ b, with ||Omega_1|| = omega.
BivecN balanced_omega1(std::size_t n, double V, double omega);

/// g^2(t) for the ellipse v(t) = cos(wt) a + sin(wt) b:
/// g^2 = (b.b - a.a) cos(2wt) - 2 (a.b) sin(2wt) + (a.a + b.b).
/// Note 2 ||v'(t)||^2 = omega^2 g^2(t).
double ellipse_g2(const VecN& a, const VecN& b, double omega, double t);

/// Instantaneous scaling factor of the ellipse's geometric frequency:
/// ||Omega_1(t)|| = h(t) omega with
/// h(t) = 2 sqrt((a.a)(b.b) - (a.b)^2) / g^2(t). Its average over half a
/// cycle (one full sweep of the ellipse's symmetry) is exactly 1.
double ellipse_h(const VecN& a, const VecN& b, double omega, double t);

/// Exact angular-velocity blade of the ellipse:
/// Omega_1(t) = (2 omega / g^2(t)) a ^ b.
BivecN ellipse_omega1(const VecN& a, const VecN& b, double omega, double t);

/// Closed-form Omega_1(t) for the bundled harmonic preset (harmonics 1/2/7
/// with amplitudes 200/20/-30 V and phase step 2 pi / 3):
///   Omega_1(t) = (5 omega / sqrt(3)) R(t) (e12 - e13 + e23)
/// with the rational-trigonometric ratio
///   R(t) = (16 c3 + 672 c6 + 84 c9 - 691) / (-160 c3 + 840 c6 + 168 c9 - 857),
///   ck = cos(k omega t).
struct Harmonic437Omega1 {
    BivecN omega1;       ///< closed-form Omega_1(t)
    double ratio;        ///< R(t)
    double denominator;  ///< denominator of R(t), for staying clear of its zeros
};

Harmonic437Omega1 harmonic437_omega1(double omega, double t);

/// Exact full-cycle average of Omega_1 for the harmonic preset:
/// (1/T) int_0^T Omega_1 dt = (4 omega / sqrt(3)) (e12 - e13 + e23), with
/// norm exactly 4 omega (the closed-form ratio R averages to 4/5 over a
/// cycle, and the curve's tangent winds 4 times per cycle).
BivecN harmonic437_average_omega1(double omega);

} // namespace ecurve::reference
