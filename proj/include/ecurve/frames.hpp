#pragma once

#include <cstddef>
#include <vector>

#include "ecurve/arc.hpp"
#include "ecurve/curves.hpp"
#include "ecurve/ga.hpp"

namespace ecurve {

/// Orthogonalization methods for building the moving frame from successive
/// arc-length derivatives.
enum class Ortho {
    CGS,   ///< classical Gram-Schmidt: project against the finished frame
    MGS,   ///< modified Gram-Schmidt: successive in-place rejection (default;
           ///< same result in exact arithmetic, better floating-point behavior)
    GAGS,  ///< blade-based rejection via outer products and contractions
};

/// Relative rank threshold: a candidate u_i with ||u_i|| below tau_rank times
/// the input vector's norm ends the frame at size i-1 instead of emitting a
/// noise direction. Planar curves therefore cleanly stop at m = 2.
inline constexpr double kDefaultRankTol = 1e-10;

/// Orthogonality acceptance threshold used by diagnostics: max |e_i . e_j|.
inline constexpr double kDefaultOrthTol = 1e-8;

/// Classical Gram-Schmidt: u_i = vs_i - sum_{j<i} ((vs_i . u_j)/(u_j . u_j)) u_j.
/// The output may be shorter than the input when a candidate falls below the
/// rank threshold (frame truncation). Throws RegularityError if the *first*
/// vector is already degenerate (no tangent direction exists).
std::vector<VecN> orthogonalize_cgs(const std::vector<VecN>& vs,
                                    double tau_rank = kDefaultRankTol);

/// Modified Gram-Schmidt: same contract as orthogonalize_cgs, computed by
/// rejecting each finished direction from all remaining vectors immediately.
/// Identical in exact arithmetic; loses less orthogonality in floating point.
std::vector<VecN> orthogonalize_mgs(const std::vector<VecN>& vs,
                                    double tau_rank = kDefaultRankTol);

/// Blade-based Gram-Schmidt: u_i is the rejection of vs_i from the span of
/// vs_1..vs_{i-1}, computed by contracting the blade vs_1^...^vs_i with the
/// inverse of the blade vs_1^...^vs_{i-1} (all expanded into grade <= 3
/// arithmetic). Matches CGS up to rounding on well-conditioned inputs.
/// Supports at most 4 input vectors; throws UnsupportedError beyond that
/// (use MGS for larger frames).
std::vector<VecN> orthogonalize_gags(const std::vector<VecN>& vs,
                                     double tau_rank = kDefaultRankTol);

std::vector<VecN> orthogonalize(Ortho method, const std::vector<VecN>& vs,
                                double tau_rank = kDefaultRankTol);

/// Curvature coefficients from an orthogonal frame:
///   kappa_i = ||u_{i+1}|| / ||u_i||   (per arc length, 1/V; always >= 0)
///   k_i     = s' * kappa_i            (per time, rad/s)
struct Curvatures {
    std::vector<double> kappa;
    std::vector<double> k;
};

Curvatures curvatures(const std::vector<VecN>& u, double s_prime);

/// The moving frame and curvatures at one instant.
struct FrameState {
    double t = 0.0;
    double s_prime = 0.0;
    std::vector<VecN> u;        ///< orthogonal frame (u_1 = dv/ds, ...)
    std::vector<VecN> e;        ///< orthonormal frame e_i = u_i / ||u_i||
    std::vector<double> kappa;  ///< m-1 curvature coefficients, 1/V
    std::vector<double> k;      ///< m-1 scaled curvatures s' kappa_i, rad/s

    std::size_t m() const noexcept { return e.size(); }
};

/// Build the frame from precomputed arc-length data.
FrameState frame_from_arc(const ArcData& ad, Ortho method = Ortho::MGS,
                          double tau_rank = kDefaultRankTol);

/// Full per-instant pipeline: t-derivatives (order m_req, 2..4) -> arc data ->
/// orthogonal frame -> curvatures. The achieved frame size may be smaller
/// than m_req (degenerate directions truncate the frame).
FrameState frame_at(const CurveModel& model, double t, int m_req = 4,
                    Ortho method = Ortho::MGS, double eps_reg = 0.0,
                    double tau_rank = kDefaultRankTol);

/// Frame plus central-difference time derivatives of its axes. The stencil
/// frames at t-h and t+h are sign-aligned to the frame at t (Gram-Schmidt
/// fixes each axis only up to sign; flipping restores a continuous motion
/// before differencing). Throws ComparabilityError if the frame size changes
/// across the stencil.
struct FrameDerivs {
    FrameState frame;           ///< frame at t
    std::vector<VecN> e_prime;  ///< d e_i / dt, one per frame axis
};

FrameDerivs frame_derivs_fd(const CurveModel& model, double t, double h, int m_req = 4,
                            Ortho method = Ortho::MGS, double eps_reg = 0.0,
                            double tau_rank = kDefaultRankTol);

/// Consistency check of the curvature coefficients against their defining
/// frame equations: returns |(e_i'/s') . e_{i+1} - kappa_i| for each i. The
/// derivative e_i' comes from the sign-aligned central difference with step h.
std::vector<double> frenet_curvatures_check(const CurveModel& model, double t, double h,
                                            int m_req = 4, Ortho method = Ortho::MGS,
                                            double eps_reg = 0.0,
                                            double tau_rank = kDefaultRankTol);

} // namespace ecurve
