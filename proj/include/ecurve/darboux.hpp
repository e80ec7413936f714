#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecurve/curves.hpp"
#include "ecurve/frames.hpp"
#include "ecurve/ga.hpp"

namespace ecurve {

/// Everything the Darboux pipeline produces at one instant.
struct DarbouxResult {
    double t = 0.0;
    double s_prime = 0.0;        ///< curve speed, V
    std::size_t m = 0;           ///< achieved frame size
    std::vector<double> kappa;   ///< curvature coefficients, 1/V
    std::vector<double> k;       ///< scaled curvatures, rad/s
    BivecN omega;                ///< Darboux bivector (canonical frame form), rad/s
    BivecN omega1;               ///< angular-velocity blade v'^v''/s'^2, rad/s
    double omega1_norm = 0.0;    ///< ||omega1|| = |k_1|, rad/s - the geometric frequency
    std::vector<BivecN> blades;  ///< blade decomposition; sums to 2 omega
    double planar_residual = 0.0;  ///< ||omega - omega1||; ~0 for planar curves
};

/// Canonical Darboux bivector from the orthonormal frame and scaled
/// curvatures: Omega = sum_i k_i e_i ^ e_{i+1}. This form is exact given the
/// frame (no finite differences) and is what the rest of the library reports.
BivecN darboux_from_frame(const std::vector<VecN>& e, const std::vector<double>& k);

/// Equivalent form straight from the orthogonal (unnormalized) frame:
/// Omega = s' * sum_i u_i ^ u_{i+1} / ||u_i||^2. Algebraically identical to
/// darboux_from_frame; kept as an independent computation path for
/// verification.
BivecN darboux_from_u(const std::vector<VecN>& u, double s_prime);

/// Derivative-based form: Omega = (s'/2) * sum_i e_i ^ de_i/ds, with the
/// axis derivatives taken with respect to arc length (e.g. e_i'/s' from the
/// sign-aligned finite differences in frame_derivs_fd). Agreement with the
/// canonical form is limited by the accuracy of the supplied derivatives.
BivecN darboux_from_frame_derivs(const std::vector<VecN>& e,
                                 const std::vector<VecN>& e_dot_s, double s_prime);

/// Blade decomposition of 2*Omega:
///   blades[0]   = k_1 e_1 ^ e_2          (the angular-velocity blade)
///   blades[i]   = k_i e_i ^ e_{i+1} + k_{i+1} e_{i+1} ^ e_{i+2}  (middle)
///   blades[m-1] = k_{m-1} e_{m-1} ^ e_m  (closing term)
/// so that sum_i blades[i] == 2 * darboux_from_frame(e, k) exactly. Frames
/// with m < 2 yield an empty list (nothing rotates).
std::vector<BivecN> darboux_blades(const std::vector<VecN>& e, const std::vector<double>& k);

/// How well the frame axes rotate under Omega: returns
/// max_i ||e_i' - e_i |_ Omega|| / max(1, ||Omega||), where e_i' are *time*
/// derivatives of the axes. For a consistent frame/bivector pair this is
/// zero up to the accuracy of e_i'.
double rotation_relation_check(const std::vector<VecN>& e,
                               const std::vector<VecN>& e_prime_t, const BivecN& omega);

/// The angular-velocity blade without any orthogonalization:
/// Omega_1 = v' ^ v'' / s'^2 = k_1 e_1 ^ e_2. This is the cheap production
/// path for the geometric frequency ||Omega_1||. Throws RegularityError when
/// s' <= eps_reg.
BivecN omega1_direct(const VecN& v_prime, const VecN& v_second, double s_prime,
                     double eps_reg = 0.0);

/// Full pipeline at one instant: derivatives -> arc data -> frame ->
/// curvatures -> bivectors.
DarbouxResult darboux_at(const CurveModel& model, double t, int m_req = 4,
                         Ortho method = Ortho::MGS, double eps_reg = 0.0,
                         double tau_rank = kDefaultRankTol);

/// Componentwise time average of the angular-velocity blade over a window.
struct AveragedBivector {
    double t0 = 0.0, t1 = 0.0;  ///< window, seconds
    BivecN mean;                ///< (1/(t1-t0)) integral of Omega_1(t) dt
    double mean_norm = 0.0;     ///< norm of the averaged bivector, rad/s
    int steps = 0;              ///< trapezoid intervals used
};

/// Composite trapezoidal average of Omega_1 over [t0, t1] with `steps`
/// intervals (>= 16; the integrand is smooth and periodic, where the
/// trapezoid rule converges spectrally on whole periods). The average is
/// taken componentwise first, then normed. A RegularityError at any
/// quadrature node propagates, carrying the offending t.
AveragedBivector average_bivector(const CurveModel& model, double t0, double t1,
                                  int steps, double eps_reg = 0.0);

/// Per-instant output record of the batch driver.
struct GeomFreqSample {
    double t = 0.0;
    double s_prime = 0.0;
    std::size_t m = 0;
    std::vector<double> k;          ///< scaled curvatures, rad/s
    BivecN omega;                   ///< Darboux bivector
    BivecN omega1;                  ///< angular-velocity blade
    double omega1_norm = 0.0;       ///< geometric frequency, rad/s
    double planar_residual = 0.0;
    std::vector<std::string> flags; ///< empty when the sample is valid

    bool ok() const noexcept { return flags.empty(); }
};

/// Run the full pipeline at each time. Samples where the curve is
/// momentarily stationary are flagged (zeroed values, "regularity" flag)
/// rather than dropped, so the output aligns 1:1 with the input times. The
/// regularity floor is derived from the largest curve speed over the
/// requested times. Throws DataError on an empty time list.
std::vector<GeomFreqSample> geometric_frequency_series(const CurveModel& model,
                                                       const std::vector<double>& times,
                                                       Ortho method = Ortho::MGS,
                                                       int m_req = 4,
                                                       double tau_rank = kDefaultRankTol);

} // namespace ecurve
