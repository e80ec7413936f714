#include "ecurve/reference.hpp"

#include <cmath>
#include <numbers>

namespace ecurve::reference {

std::pair<VecN, VecN> balanced_axes(std::size_t n, double V) {
    VecN a(n), b(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double ang =
            2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        a[m] = V * std::cos(ang);
        b[m] = V * std::sin(ang);
    }
    return {a, b};
}

double balanced_speed(std::size_t n, double V, double omega) {
    return omega / std::numbers::sqrt2 * std::sqrt(static_cast<double>(n)) * V;
}

BivecN balanced_omega1(std::size_t n, double V, double omega) {
    const auto [a, b] = balanced_axes(n, V);
    return (2.0 * omega / (static_cast<double>(n) * V * V)) * wedge(a, b);
}

double ellipse_g2(const VecN& a, const VecN& b, double omega, double t) {
    const double a2 = dot(a, a), b2 = dot(b, b), ab = dot(a, b);
    return (b2 - a2) * std::cos(2.0 * omega * t) - 2.0 * ab * std::sin(2.0 * omega * t) +
           (a2 + b2);
}

double ellipse_h(const VecN& a, const VecN& b, double omega, double t) {
    const double a2 = dot(a, a), b2 = dot(b, b), ab = dot(a, b);
    return 2.0 * std::sqrt(a2 * b2 - ab * ab) / ellipse_g2(a, b, omega, t);
}

BivecN ellipse_omega1(const VecN& a, const VecN& b, double omega, double t) {
    return (2.0 * omega / ellipse_g2(a, b, omega, t)) * wedge(a, b);
}

Harmonic437Omega1 harmonic437_omega1(double omega, double t) {
    const double c3 = std::cos(3.0 * omega * t);
    const double c6 = std::cos(6.0 * omega * t);
    const double c9 = std::cos(9.0 * omega * t);
    const double num = 16.0 * c3 + 672.0 * c6 + 84.0 * c9 - 691.0;
    const double den = -160.0 * c3 + 840.0 * c6 + 168.0 * c9 - 857.0;

    Harmonic437Omega1 out;
    out.ratio = num / den;
    out.denominator = den;
    const double coef = 5.0 * omega / std::sqrt(3.0) * out.ratio;
    BivecN b(3);
    b[0] = coef;   // e12
    b[1] = -coef;  // e13
    b[2] = coef;   // e23
    out.omega1 = b;
    return out;
}

BivecN harmonic437_average_omega1(double omega) {
    const double coef = 4.0 * omega / std::sqrt(3.0);
    BivecN b(3);
    b[0] = coef;
    b[1] = -coef;
    b[2] = coef;
    return b;
}

} // namespace ecurve::reference
