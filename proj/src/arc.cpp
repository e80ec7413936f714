#include "ecurve/arc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ecurve {

TDerivStack t_derivs(const CurveModel& model, double t, int m) {
    if (m < 1) throw UnsupportedError("t_derivs: need at least one derivative");
    if (m > model.max_order()) {
        throw UnsupportedError("t_derivs: model provides derivatives up to order " +
                               std::to_string(model.max_order()) + ", requested " +
                               std::to_string(m));
    }
    TDerivStack td;
    td.t = t;
    td.d.reserve(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) td.d.push_back(model.eval(t, k));
    return td;
}

std::vector<double> arc_speed_derivs(const TDerivStack& td, double eps_reg) {
    const std::size_t m = std::min<std::size_t>(td.order(), 4);
    if (m == 0) throw UnsupportedError("arc_speed_derivs: empty derivative stack");

    const VecN& v1 = td.d[0];
    const double s1 = std::sqrt(dot(v1, v1));
    if (s1 <= eps_reg || s1 == 0.0) {
        throw RegularityError("curve speed ||v'|| = " + std::to_string(s1) +
                              " at t = " + std::to_string(td.t) +
                              " is below the regularity floor; the frame is undefined "
                              "at a stationary point", td.t);
    }
    std::vector<double> sd{s1};
    if (m >= 2) {
        sd.push_back(dot(v1, td.d[1]) / s1);
    }
    if (m >= 3) {
        const double s2 = sd[1];
        sd.push_back((dot(td.d[1], td.d[1]) + dot(v1, td.d[2]) - s2 * s2) / s1);
    }
    if (m >= 4) {
        const double s2 = sd[1], s3 = sd[2];
        sd.push_back((3.0 * dot(td.d[1], td.d[2]) + dot(v1, td.d[3]) - 3.0 * s2 * s3) / s1);
    }
    return sd;
}

std::vector<VecN> s_derivs(const TDerivStack& td, const std::vector<double>& sd) {
    const std::size_t m = std::min(td.order(), sd.size());
    if (m == 0) throw UnsupportedError("s_derivs: empty derivative stack");
    const double s1 = sd[0];
    if (s1 <= 0.0) {
        throw RegularityError("s_derivs: nonpositive curve speed", td.t);
    }

    std::vector<VecN> out;
    out.reserve(m);
    const VecN& v1 = td.d[0];
    out.push_back(v1 / s1);
    if (m >= 2) {
        const VecN& v2 = td.d[1];
        const double s2 = sd[1];
        out.push_back((s1 * v2 - s2 * v1) / (s1 * s1 * s1));
    }
    if (m >= 3) {
        const VecN& v2 = td.d[1];
        const VecN& v3 = td.d[2];
        const double s2 = sd[1], s3 = sd[2];
        const double s1_2 = s1 * s1;
        const double s1_5 = s1_2 * s1_2 * s1;
        out.push_back((s1_2 * v3 - 3.0 * s1 * s2 * v2 - (s1 * s3 - 3.0 * s2 * s2) * v1) / s1_5);
    }
    if (m >= 4) {
        const VecN& v2 = td.d[1];
        const VecN& v3 = td.d[2];
        const VecN& v4 = td.d[3];
        const double s2 = sd[1], s3 = sd[2], s4 = sd[3];
        const double s1_2 = s1 * s1;
        const double s1_3 = s1_2 * s1;
        const double s1_7 = s1_3 * s1_3 * s1;
        out.push_back((s1_3 * v4 - 6.0 * s1_2 * s2 * v3 -
                       (4.0 * s1_2 * s3 - 15.0 * s1 * s2 * s2) * v2 +
                       (10.0 * s1 * s2 * s3 - 15.0 * s2 * s2 * s2 - s1_2 * s4) * v1) /
                      s1_7);
    }
    return out;
}

ArcData compute_arc_data(const TDerivStack& td, double eps_reg) {
    ArcData ad;
    ad.t = td.t;
    ad.sd = arc_speed_derivs(td, eps_reg);
    ad.sdot = s_derivs(td, ad.sd);
    return ad;
}

ArcData compute_arc_data(const CurveModel& model, double t, int m, double eps_reg) {
    return compute_arc_data(t_derivs(model, t, m), eps_reg);
}

double regularity_floor(const CurveModel& model, double t0, double t1, int probes) {
    if (probes < 2) probes = 2;
    double vmax = 0.0;
    for (int i = 0; i < probes; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / (probes - 1);
        vmax = std::max(vmax, norm_vec(model.eval(t, 1)));
    }
    return 1e-12 * vmax;
}

double component_chain_rule_check(const CurveModel& model, double t) {
    if (model.max_order() < 3) {
        throw UnsupportedError("component_chain_rule_check: needs third derivatives");
    }
    const TDerivStack td = t_derivs(model, t, 3);
    const std::vector<double> sd = arc_speed_derivs(td);
    const std::vector<VecN> sv = s_derivs(td, sd);

    const double s1 = sd[0], s2 = sd[1], s3 = sd[2];
    const double s1_2 = s1 * s1;
    const double s1_3 = s1_2 * s1;
    const double s1_5 = s1_2 * s1_3;
    double worst = 0.0;
    for (std::size_t i = 0; i < td.d[0].dim(); ++i) {
        const double v1 = td.d[0][i], v2 = td.d[1][i], v3 = td.d[2][i];
        const double c1 = v1 / s1;
        const double c2 = (s1 * v2 - s2 * v1) / s1_3;
        const double c3 = ((3.0 * s2 * s2 - s1 * s3) * v1 - 3.0 * s1 * s2 * v2 + s1_2 * v3) / s1_5;
        worst = std::max({worst, std::abs(c1 - sv[0][i]), std::abs(c2 - sv[1][i]),
                          std::abs(c3 - sv[2][i])});
    }
    return worst;
}

} // namespace ecurve
