#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "ecurve/arc.hpp"
#include "ecurve/curves.hpp"
#include "ecurve/errors.hpp"
#include "ecurve/frames.hpp"
#include "ecurve/ga.hpp"
#include "ecurve/reference.hpp"

using namespace ecurve;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOmega = 2.0 * kPi * 50.0;

double rel(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

VecN random_vec(std::mt19937& rng, std::size_t dim) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VecN v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = dist(rng);
    return v;
}

double max_cross_dot(const std::vector<VecN>& e) {
    double worst = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            worst = std::max(worst, std::abs(dot(e[i], e[j])));
        }
    }
    return worst;
}

/// 4-phase two-circle trajectory (rates 1 and sqrt(2)): a full 4-axis frame.
TrigCurve two_circle_model() {
    const double hp = kPi / 2.0;
    const double w2 = std::numbers::sqrt2;
    return TrigCurve({{{1.0, 1.0, hp}},
                      {{1.0, 1.0, 0.0}},
                      {{1.0, w2, hp}},
                      {{1.0, w2, 0.0}}});
}

/// Planar for t < knee, then a third dimension switches on as (t - knee)^3.
/// C2 at the knee, so the frame size jumps from 2 to 3 across it.
class KneeCurve final : public CurveModel {
public:
    std::size_t dim() const override { return 3; }
    int max_order() const override { return kUnboundedOrder; }
    double t_begin() const override { return -1e30; }
    double t_end() const override { return 1e30; }
    VecN eval(double t, int order) const override {
        VecN v(3);
        switch (order) {
            case 0: v[0] = std::cos(t); v[1] = std::sin(t); break;
            case 1: v[0] = -std::sin(t); v[1] = std::cos(t); break;
            case 2: v[0] = -std::cos(t); v[1] = -std::sin(t); break;
            case 3: v[0] = std::sin(t); v[1] = -std::cos(t); break;
            default: v[0] = std::cos(t + order * kPi / 2.0); v[1] = std::sin(t + order * kPi / 2.0); break;
        }
        const double x = t - 1.0;
        if (x > 0.0) {
            switch (order) {
                case 0: v[2] = x * x * x; break;
                case 1: v[2] = 3.0 * x * x; break;
                case 2: v[2] = 6.0 * x; break;
                case 3: v[2] = 6.0; break;
                default: break;
            }
        }
        return v;
    }
};

} // namespace

TEST_CASE("orthogonalizers on textbook inputs") {
    const std::vector<VecN> simple = {VecN{1, 0}, VecN{1, 1}};
    for (Ortho method : {Ortho::CGS, Ortho::MGS, Ortho::GAGS}) {
        const auto u = orthogonalize(method, simple);
        REQUIRE(u.size() == 2);
        CHECK(norm_vec(u[0] - VecN{1, 0}) < 1e-15);
        CHECK(norm_vec(u[1] - VecN{0, 1}) < 1e-15);
    }

    // Identity basis is already orthogonal: all methods return it unchanged.
    const std::vector<VecN> basis = {VecN{1, 0, 0}, VecN{0, 1, 0}, VecN{0, 0, 1}};
    for (Ortho method : {Ortho::CGS, Ortho::MGS, Ortho::GAGS}) {
        const auto u = orthogonalize(method, basis);
        REQUIRE(u.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(norm_vec(u[i] - basis[i]) < 1e-15);
    }
}

TEST_CASE("rank deficiency truncates the frame; degenerate first vector throws") {
    const std::vector<VecN> dependent = {VecN{1, 0, 0}, VecN{2, 0, 0}, VecN{0, 0, 1}};
    for (Ortho method : {Ortho::CGS, Ortho::MGS, Ortho::GAGS}) {
        const auto u = orthogonalize(method, dependent);
        REQUIRE(u.size() == 1);
        CHECK(norm_vec(u[0] - VecN{1, 0, 0}) < 1e-15);
    }

    const std::vector<VecN> zero_first = {VecN(std::size_t{3}), VecN{0, 1, 0}};
    for (Ortho method : {Ortho::CGS, Ortho::MGS, Ortho::GAGS}) {
        CHECK_THROWS_AS(orthogonalize(method, zero_first), RegularityError);
    }
}

TEST_CASE("balanced frame vectors match their closed forms") {
    const std::size_t n = 3;
    const double V = 1.0;
    const EllipseCurve model = balanced_sinusoid(n, V, kOmega);
    const auto [a, b] = reference::balanced_axes(n, V);

    std::mt19937 rng(79);
    std::uniform_real_distribution<double> ut(0.0, 0.02);
    for (int rep = 0; rep < 16; ++rep) {
        const double t = ut(rng);
        const FrameState fs = frame_at(model, t, 4);
        REQUIRE(fs.m() == 2);  // the circle is planar

        const double nV = static_cast<double>(n) * V * V;
        const VecN u1_ref =
            (-std::numbers::sqrt2 / (std::sqrt(static_cast<double>(n)) * V)) *
            (std::sin(kOmega * t) * a - std::cos(kOmega * t) * b);
        const VecN u2_ref =
            (-2.0 / nV) * (std::cos(kOmega * t) * a + std::sin(kOmega * t) * b);
        CHECK(norm_vec(fs.u[0] - u1_ref) < 1e-12);
        CHECK(norm_vec(fs.u[1] - u2_ref) < 1e-12);
    }
}

TEST_CASE("GAGS equals CGS on well-conditioned random inputs") {
    std::mt19937 rng(83);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<VecN> vs;
        for (int i = 0; i < 3; ++i) vs.push_back(random_vec(rng, 4));
        const auto uc = orthogonalize_cgs(vs);
        if (uc.size() != 3) continue;
        const auto ug = orthogonalize_gags(vs);
        REQUIRE(ug.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(norm_vec(uc[i] - ug[i]) / std::max(1e-300, norm_vec(uc[i])) < 1e-9);
        }
    }

    // Four vectors exercise the deepest blade recursion.
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<VecN> vs;
        for (int i = 0; i < 4; ++i) vs.push_back(random_vec(rng, 5));
        const auto uc = orthogonalize_cgs(vs);
        if (uc.size() != 4) continue;
        const auto ug = orthogonalize_gags(vs);
        REQUIRE(ug.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(norm_vec(uc[i] - ug[i]) / std::max(1e-300, norm_vec(uc[i])) < 1e-9);
        }
    }

    std::vector<VecN> five;
    for (int i = 0; i < 5; ++i) five.push_back(random_vec(rng, 6));
    CHECK_THROWS_AS(orthogonalize_gags(five), UnsupportedError);
}

TEST_CASE("GAGS leaves an already-orthogonal pair unchanged") {
    // The (tangent, normal) pair from arc-length derivatives is orthogonal by
    // construction; the blade rejection must return the second vector as-is.
    const EllipseCurve model = balanced_sinusoid(3, 230.0, kOmega);
    const ArcData ad = compute_arc_data(model, 0.0031, 2);
    const auto u = orthogonalize_gags(ad.sdot);
    REQUIRE(u.size() == 2);
    CHECK(norm_vec(u[0] - ad.sdot[0]) < 1e-15);
    CHECK(norm_vec(u[1] - ad.sdot[1]) < 1e-12 * norm_vec(ad.sdot[1]));
}

TEST_CASE("MGS orthogonality residual is never worse than CGS on the demo signal") {
    const TrigCurve model = harmonic437_model(kOmega);
    std::mt19937 rng(89);
    std::uniform_real_distribution<double> ut(0.0, 0.02);
    for (int rep = 0; rep < 32; ++rep) {
        const ArcData ad = compute_arc_data(model, ut(rng), 4);
        std::vector<VecN> e_mgs, e_cgs;
        for (const VecN& u : orthogonalize_mgs(ad.sdot)) e_mgs.push_back(normalized(u));
        for (const VecN& u : orthogonalize_cgs(ad.sdot)) e_cgs.push_back(normalized(u));
        CHECK(max_cross_dot(e_mgs) <= max_cross_dot(e_cgs));
    }
}

TEST_CASE("curvatures: circle of radius 1 at speed 2 gives kappa=1, k=2") {
    const TrigCurve circle({{{1.0, 2.0, kPi / 2.0}}, {{1.0, 2.0, 0.0}}});  // (cos 2t, sin 2t)
    const FrameState fs = frame_at(circle, 0.4, 2);
    REQUIRE(fs.m() == 2);
    CHECK(rel(fs.s_prime, 2.0) < 1e-12);
    CHECK(rel(fs.kappa.at(0), 1.0) < 1e-12);
    CHECK(rel(fs.k.at(0), 2.0) < 1e-12);
}

TEST_CASE("balanced and unbalanced scaled curvature closed forms") {
    const EllipseCurve bal = balanced_sinusoid(3, 1.0, kOmega);
    CHECK(rel(frame_at(bal, 0.0123, 2).k.at(0), kOmega) < 1e-12);

    const EllipseCurve unbal = unbalanced_sinusoid(
        {2.0, 1.0, 1.0}, {0.0, -2.0 * kPi / 3.0, 2.0 * kPi / 3.0}, kOmega);
    const VecN& a = unbal.a();
    const VecN& b = unbal.b();
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> ut(0.0, 0.02);
    for (int rep = 0; rep < 16; ++rep) {
        const double t = ut(rng);
        const double g2 = reference::ellipse_g2(a, b, kOmega, t);
        const double k1_ref =
            (2.0 / g2) *
            std::sqrt(dot(a, a) * dot(b, b) - dot(a, b) * dot(a, b)) * kOmega;
        CHECK(rel(frame_at(unbal, t, 2).k.at(0), k1_ref) < 1e-10);
    }
}

TEST_CASE("frame scale equivariance: e and k fixed, u scales, kappa inversely") {
    /// Same curve with all voltages multiplied by alpha.
    class Scaled final : public CurveModel {
    public:
        Scaled(const CurveModel& base, double alpha) : base_(base), alpha_(alpha) {}
        std::size_t dim() const override { return base_.dim(); }
        int max_order() const override { return base_.max_order(); }
        double t_begin() const override { return base_.t_begin(); }
        double t_end() const override { return base_.t_end(); }
        VecN eval(double t, int order) const override { return alpha_ * base_.eval(t, order); }

    private:
        const CurveModel& base_;
        double alpha_;
    };

    const TrigCurve base = harmonic437_model(kOmega);
    const double alpha = 230.0;
    const Scaled scaled(base, alpha);

    std::mt19937 rng(101);
    std::uniform_real_distribution<double> ut(0.0, 0.02);
    for (int rep = 0; rep < 8; ++rep) {
        const double t = ut(rng);
        const FrameState f1 = frame_at(base, t, 4);
        const FrameState f2 = frame_at(scaled, t, 4);
        REQUIRE(f1.m() == f2.m());
        for (std::size_t i = 0; i < f1.m(); ++i) {
            // The i-th arc-length derivative scales as alpha^(-i) (0-based:
            // the unit tangent is scale-free), so u_i does too.
            const double upow = std::pow(alpha, -static_cast<double>(i));
            CHECK(norm_vec(f2.u[i] - upow * f1.u[i]) < 1e-9 * norm_vec(f2.u[i]));
            CHECK(norm_vec(f2.e[i] - f1.e[i]) < 1e-10);
        }
        for (std::size_t i = 0; i + 1 < f1.m(); ++i) {
            CHECK(rel(f2.kappa[i], f1.kappa[i] / alpha) < 1e-10);
            CHECK(rel(f2.k[i], f1.k[i]) < 1e-10);
        }
    }
}

TEST_CASE("frame invariants on a genuinely 4-dimensional signal") {
    const TrigCurve tc = two_circle_model();
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    for (int rep = 0; rep < 16; ++rep) {
        const FrameState fs = frame_at(tc, ut(rng), 4);
        REQUIRE(fs.m() == 4);
        CHECK(max_cross_dot(fs.e) < 1e-8);
        for (const VecN& e : fs.e) CHECK(std::abs(norm_vec(e) - 1.0) < 1e-12);
        for (std::size_t i = 0; i + 1 < fs.m(); ++i) {
            CHECK(fs.kappa[i] >= 0.0);
            CHECK(rel(fs.k[i], fs.s_prime * fs.kappa[i]) < 1e-15);
        }
    }
}

TEST_CASE("finite-difference curvature check against the Frenet definition") {
    const EllipseCurve bal = balanced_sinusoid(3, 1.0, kOmega);
    const auto res_bal = frenet_curvatures_check(bal, 0.0042, 1e-6 / kOmega, 4);
    REQUIRE(res_bal.size() == 1);
    CHECK(res_bal[0] < 1e-5);

    // 2D unit circle: e1' . e2 / s' = kappa = 1.
    const TrigCurve circle({{{1.0, 1.0, kPi / 2.0}}, {{1.0, 1.0, 0.0}}});
    const auto res_circ = frenet_curvatures_check(circle, 1.1, 1e-6, 2);
    REQUIRE(res_circ.size() == 1);
    CHECK(res_circ[0] < 1e-6);

    const TrigCurve harm = harmonic437_model(kOmega);
    const auto res_harm = frenet_curvatures_check(harm, 1.7e-3, 1e-6 * 0.02, 4);
    for (double r : res_harm) CHECK(r < 1e-4);
}

TEST_CASE("frame size change across the FD stencil raises ComparabilityError") {
    const KneeCurve knee;
    // Frame is planar below t=1 and 3-dimensional above it.
    CHECK(frame_at(knee, 0.5, 3).m() == 2);
    CHECK(frame_at(knee, 1.5, 3).m() == 3);
    CHECK_THROWS_AS(frame_derivs_fd(knee, 1.0, 0.5, 3), ComparabilityError);
}

TEST_CASE("frame_at validates the requested order") {
    const EllipseCurve bal = balanced_sinusoid(3, 1.0, kOmega);
    CHECK_THROWS_AS(frame_at(bal, 0.0, 1), UnsupportedError);
    CHECK_THROWS_AS(frame_at(bal, 0.0, 5), UnsupportedError);
}
