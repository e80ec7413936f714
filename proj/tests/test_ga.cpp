#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "ecurve/curves.hpp"
#include "ecurve/errors.hpp"
#include "ecurve/ga.hpp"
#include "ecurve/reference.hpp"

using namespace ecurve;

namespace {

VecN random_vec(std::mt19937& rng, std::size_t dim, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    VecN v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = dist(rng);
    return v;
}

} // namespace

TEST_CASE("dot: basis orthogonality, Pythagorean, and the balanced axes") {
    CHECK(dot(VecN{1, 0, 0}, VecN{0, 1, 0}) == doctest::Approx(0.0));
    CHECK(dot(VecN{3, 4}, VecN{3, 4}) == doctest::Approx(25.0));

    const auto [a, b] = reference::balanced_axes(3, 1.0);
    CHECK(std::abs(dot(a, b)) < 1e-15);
    CHECK(dot(a, a) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(dot(b, b) == doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS_AS(dot(VecN{1, 0}, VecN{1, 0, 0}), DimensionError);
}

TEST_CASE("wedge: basis blade, antisymmetry, and the balanced-axes norm") {
    const BivecN b12 = wedge(VecN{1, 0, 0}, VecN{0, 1, 0});
    REQUIRE(b12.size() == 3);
    CHECK(b12[0] == doctest::Approx(1.0));  // (1,2) slot
    CHECK(b12[1] == doctest::Approx(0.0));  // (1,3) slot
    CHECK(b12[2] == doctest::Approx(0.0));  // (2,3) slot

    std::mt19937 rng(7);
    const VecN a = random_vec(rng, 4);
    const VecN b = random_vec(rng, 4);
    const BivecN self = wedge(a, a);
    for (std::size_t i = 0; i < self.size(); ++i) CHECK(self[i] == 0.0);
    const BivecN ab = wedge(a, b);
    const BivecN ba = wedge(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i) CHECK(ab[i] == doctest::Approx(-ba[i]));

    const auto [ba3, bb3] = reference::balanced_axes(3, 1.0);
    CHECK(norm_bivec(wedge(ba3, bb3)) == doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS_AS(wedge(VecN{1, 0}, VecN{1, 0, 0}), DimensionError);
}

TEST_CASE("wedge is bilinear") {
    std::mt19937 rng(11);
    for (std::size_t dim = 2; dim <= 8; ++dim) {
        for (int rep = 0; rep < 20; ++rep) {
            const VecN a = random_vec(rng, dim);
            const VecN b = random_vec(rng, dim);
            const VecN c = random_vec(rng, dim);
            const double alpha = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
            const BivecN lhs = wedge(alpha * a + b, c);
            const BivecN rhs = alpha * wedge(a, c) + wedge(b, c);
            const double scale = std::max(norm_bivec(rhs), 1.0);
            CHECK(norm_bivec(lhs - rhs) / scale < 1e-12);
        }
    }
}

TEST_CASE("left contraction: basis cases and the adjoint identity") {
    const VecN s1{1, 0, 0}, s2{0, 1, 0}, s3{0, 0, 1};
    const BivecN b12 = wedge(s1, s2);
    const VecN r1 = left_contract(s1, b12);
    CHECK(norm_vec(r1 - s2) < 1e-15);
    const VecN r3 = left_contract(s3, b12);
    CHECK(norm_vec(r3) == 0.0);

    std::mt19937 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const VecN a = random_vec(rng, 5);
        const VecN x = random_vec(rng, 5);
        const VecN y = random_vec(rng, 5);
        const VecN lhs = left_contract(a, wedge(x, y));
        const VecN rhs = dot(a, x) * y - dot(a, y) * x;
        CHECK(norm_vec(lhs - rhs) / std::max(1.0, norm_vec(rhs)) < 1e-12);
    }
}

TEST_CASE("norms: vector, the demo bivector, and random orthonormal wedges") {
    CHECK(norm_vec(VecN{3, 4}) == doctest::Approx(5.0));

    const double omega = 2.0 * std::numbers::pi * 50.0;
    BivecN demo(3);
    demo[0] = std::sqrt(3.0) * omega;   // e12
    demo[1] = -std::sqrt(3.0) * omega;  // e13
    demo[2] = std::sqrt(3.0) * omega;   // e23
    CHECK(norm_bivec(demo) == doctest::Approx(3.0 * omega).epsilon(1e-14));

    std::mt19937 rng(17);
    for (std::size_t dim = 2; dim <= 8; ++dim) {
        for (int rep = 0; rep < 10; ++rep) {
            // Build an orthonormal pair by normalizing and rejecting.
            const VecN e1 = normalized(random_vec(rng, dim));
            VecN w = random_vec(rng, dim);
            w -= dot(w, e1) * e1;
            const VecN e2 = normalized(w);
            CHECK(norm_bivec(wedge(e1, e2)) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("Lagrange identity ||a^b||^2 = ||a||^2 ||b||^2 - (a.b)^2") {
    std::mt19937 rng(19);
    for (std::size_t dim = 2; dim <= 8; ++dim) {
        for (int rep = 0; rep < 25; ++rep) {
            const VecN a = random_vec(rng, dim, -5.0, 5.0);
            const VecN b = random_vec(rng, dim, -5.0, 5.0);
            const double lhs = std::pow(norm_bivec(wedge(a, b)), 2);
            const double rhs = dot(a, a) * dot(b, b) - dot(a, b) * dot(a, b);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("bivector storage: canonical pair order, antisymmetric extension, labels") {
    for (std::size_t dim : {2, 3, 5, 9, 12}) {
        const BivecN b(dim);
        REQUIRE(b.size() == dim * (dim - 1) / 2);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                CHECK(b.pair_index(i, j) == idx);
                const auto [pi, pj] = b.pair_at(idx);
                CHECK(pi == i);
                CHECK(pj == j);
                ++idx;
            }
        }
    }

    BivecN b(3);
    b.at_pair(0, 2) = 2.5;
    CHECK(b.comp(0, 2) == doctest::Approx(2.5));
    CHECK(b.comp(2, 0) == doctest::Approx(-2.5));
    CHECK(b.comp(1, 1) == 0.0);

    CHECK(bivec_basis_label(BivecN(3), 0) == "e12");
    CHECK(bivec_basis_label(BivecN(3), 1) == "e13");
    CHECK(bivec_basis_label(BivecN(3), 2) == "e23");
    const BivecN big(12);
    CHECK(bivec_basis_label(big, 0) == "e1_2");
    CHECK(bivec_basis_label(big, big.size() - 1) == "e11_12");
}

TEST_CASE("construction guards: dimension floor and finiteness checks") {
    CHECK_THROWS_AS(VecN(std::size_t{1}), DimensionError);
    CHECK_THROWS_AS(BivecN(std::size_t{1}), DimensionError);
    CHECK_THROWS_AS(normalized(VecN(std::size_t{3})), RegularityError);

    VecN v{1.0, 2.0};
    CHECK(v.all_finite());
    v[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(v.all_finite());
}
