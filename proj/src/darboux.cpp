#include "ecurve/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ecurve/arc.hpp"

namespace ecurve {

namespace {

void require_frame_sizes(const std::vector<VecN>& e, const std::vector<double>& k,
                         const char* what) {
    if (e.empty()) throw DimensionError(std::string(what) + ": empty frame");
    if (k.size() + 1 != e.size()) {
        throw DimensionError(std::string(what) + ": frame of size " +
                             std::to_string(e.size()) + " needs " +
                             std::to_string(e.size() - 1) + " curvatures, got " +
                             std::to_string(k.size()));
    }
}

} // namespace

BivecN darboux_from_frame(const std::vector<VecN>& e, const std::vector<double>& k) {
    require_frame_sizes(e, k, "darboux_from_frame");
    BivecN omega(e.front().dim());
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        omega += k[i] * wedge(e[i], e[i + 1]);
    }
    return omega;
}

BivecN darboux_from_u(const std::vector<VecN>& u, double s_prime) {
    if (u.empty()) throw DimensionError("darboux_from_u: empty frame");
    BivecN omega(u.front().dim());
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        omega += wedge(u[i], u[i + 1]) / dot(u[i], u[i]);
    }
    return s_prime * omega;
}

BivecN darboux_from_frame_derivs(const std::vector<VecN>& e,
                                 const std::vector<VecN>& e_dot_s, double s_prime) {
    if (e.empty()) throw DimensionError("darboux_from_frame_derivs: empty frame");
    if (e.size() != e_dot_s.size()) {
        throw DimensionError("darboux_from_frame_derivs: need one derivative per axis");
    }
    BivecN omega(e.front().dim());
    for (std::size_t i = 0; i < e.size(); ++i) {
        omega += wedge(e[i], e_dot_s[i]);
    }
    return (s_prime / 2.0) * omega;
}

std::vector<BivecN> darboux_blades(const std::vector<VecN>& e, const std::vector<double>& k) {
    require_frame_sizes(e, k, "darboux_blades");
    const std::size_t m = e.size();
    std::vector<BivecN> blades;
    if (m < 2) return blades;
    blades.reserve(m);
    // First and last blades are single terms; middle blades couple the two
    // rotations adjacent to their axis. The closing term makes the blade sum
    // exactly 2 Omega.
    blades.push_back(k[0] * wedge(e[0], e[1]));
    for (std::size_t i = 1; i + 1 < m; ++i) {
        blades.push_back(k[i - 1] * wedge(e[i - 1], e[i]) + k[i] * wedge(e[i], e[i + 1]));
    }
    blades.push_back(k[m - 2] * wedge(e[m - 2], e[m - 1]));
    return blades;
}

double rotation_relation_check(const std::vector<VecN>& e,
                               const std::vector<VecN>& e_prime_t, const BivecN& omega) {
    if (e.size() != e_prime_t.size()) {
        throw DimensionError("rotation_relation_check: need one derivative per axis");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        worst = std::max(worst, norm_vec(e_prime_t[i] - left_contract(e[i], omega)));
    }
    return worst / std::max(1.0, norm_bivec(omega));
}

BivecN omega1_direct(const VecN& v_prime, const VecN& v_second, double s_prime,
                     double eps_reg) {
    if (s_prime <= eps_reg || s_prime == 0.0) {
        throw RegularityError("omega1_direct: curve speed below the regularity floor",
                              std::numeric_limits<double>::quiet_NaN());
    }
    return wedge(v_prime, v_second) / (s_prime * s_prime);
}

DarbouxResult darboux_at(const CurveModel& model, double t, int m_req, Ortho method,
                         double eps_reg, double tau_rank) {
    const TDerivStack td = t_derivs(model, t, std::min(m_req, 4));
    const ArcData ad = compute_arc_data(td, eps_reg);
    const FrameState fs = frame_from_arc(ad, method, tau_rank);

    DarbouxResult r;
    r.t = t;
    r.s_prime = fs.s_prime;
    r.m = fs.m();
    r.kappa = fs.kappa;
    r.k = fs.k;
    r.omega = darboux_from_frame(fs.e, fs.k);
    r.omega1 = omega1_direct(td.d[0], td.d[1], fs.s_prime, eps_reg);
    r.omega1_norm = norm_bivec(r.omega1);
    r.blades = darboux_blades(fs.e, fs.k);
    r.planar_residual = norm_bivec(r.omega - r.omega1);
    return r;
}

AveragedBivector average_bivector(const CurveModel& model, double t0, double t1,
                                  int steps, double eps_reg) {
    if (steps < 16) {
        throw DataError("average_bivector: needs at least 16 quadrature steps");
    }
    if (!(t1 > t0)) throw DataError("average_bivector: empty averaging window");

    const double dt = (t1 - t0) / steps;
    BivecN acc(model.dim());
    for (int i = 0; i <= steps; ++i) {
        const double t = t0 + dt * i;
        const TDerivStack td = t_derivs(model, t, 2);
        const double sp = norm_vec(td.d[0]);
        if (sp <= eps_reg || sp == 0.0) {
            throw RegularityError("average_bivector: stationary point inside the "
                                  "averaging window at t = " + std::to_string(t), t);
        }
        const BivecN w = wedge(td.d[0], td.d[1]) / (sp * sp);
        const double weight = (i == 0 || i == steps) ? 0.5 : 1.0;
        acc += weight * w;
    }

    AveragedBivector out;
    out.t0 = t0;
    out.t1 = t1;
    out.mean = acc * (dt / (t1 - t0));
    out.mean_norm = norm_bivec(out.mean);
    out.steps = steps;
    return out;
}

std::vector<GeomFreqSample> geometric_frequency_series(const CurveModel& model,
                                                       const std::vector<double>& times,
                                                       Ortho method, int m_req,
                                                       double tau_rank) {
    if (times.empty()) throw DataError("geometric_frequency_series: no sample times");

    // One regularity floor for the whole run, relative to the fastest point
    // seen: a momentary stall is flagged, not treated as a tiny frame.
    double vmax = 0.0;
    for (double t : times) vmax = std::max(vmax, norm_vec(model.eval(t, 1)));
    const double eps_reg = 1e-12 * vmax;

    std::vector<GeomFreqSample> out;
    out.reserve(times.size());
    for (double t : times) {
        GeomFreqSample s;
        s.t = t;
        try {
            const DarbouxResult r = darboux_at(model, t, m_req, method, eps_reg, tau_rank);
            s.s_prime = r.s_prime;
            s.m = r.m;
            s.k = r.k;
            s.omega = r.omega;
            s.omega1 = r.omega1;
            s.omega1_norm = r.omega1_norm;
            s.planar_residual = r.planar_residual;
        } catch (const RegularityError&) {
            s.s_prime = 0.0;
            s.m = 0;
            s.omega = BivecN(model.dim());
            s.omega1 = BivecN(model.dim());
            s.omega1_norm = 0.0;
            s.planar_residual = 0.0;
            s.flags.push_back("regularity");
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace ecurve
