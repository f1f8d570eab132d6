#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dualquad/sampling.hpp"
#include "dualquad/theorems.hpp"
#include "fixtures.hpp"

using namespace dualquad;
using namespace fixtures;

namespace {

constexpr double kPi = std::numbers::pi;

// Rebuild vertices from side lengths and interior angles via the per-class
// edge directions of the reference pose.
MarkedQuadrangle rebuild(const std::array<double, 4>& s, const std::array<double, 4>& beta,
                         ShapeClass cls) {
    std::array<double, 4> dir{};
    dir[0] = 0.0;
    dir[1] = kPi - beta[1];
    dir[2] = cls == ShapeClass::Convex ? 2.0 * kPi - beta[1] - beta[2] : beta[2] - beta[1];
    dir[3] = cls == ShapeClass::SelfIntersecting ? beta[0] - kPi : kPi + beta[0];

    std::array<Point2, 4> v;
    Complex pos = 0.0;
    for (int k = 0; k < 4; ++k) {
        v[k] = to_point(pos);
        pos += std::polar(s[k], dir[k]);
    }
    return MarkedQuadrangle(v);
}

} // namespace

TEST_CASE("interior angles of reference shapes") {
    auto sq = interior_angles(square_half());
    for (int k = 0; k < 4; ++k) {
        CHECK(sq.angle[k] == doctest::Approx(kPi / 2.0).epsilon(1e-12));
        CHECK(sq.half_angle[k] == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    }

    auto hg = interior_angles(crossed_hourglass());
    for (int k = 0; k < 4; ++k)
        CHECK(hg.angle[k] == doctest::Approx(kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("convex interior angles sum to 2 pi") {
    Rng rng(211);
    for (int i = 0; i < 50; ++i) {
        auto a = interior_angles(normalize(random_convex(rng)));
        double sum = a.angle[0] + a.angle[1] + a.angle[2] + a.angle[3];
        CHECK(sum == doctest::Approx(2.0 * kPi).epsilon(1e-10));
    }
}

TEST_CASE("closed-form basis of the canonical square") {
    auto s = edge_lengths(square_half());
    auto ang = interior_angles(square_half());
    PlaneBasis cf = closed_form_basis(s, ang, ShapeClass::Convex);

    double q = 0.25 * std::sqrt(2.0);
    Vec4 expect_g{-0.5, q, 0.0, -q};
    Vec4 expect_h{0.0, -q, 0.5, -q};
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(cf.first[k] - expect_g[k]) < 1e-12);
        CHECK(std::abs(cf.second[k] - expect_h[k]) < 1e-12);
    }

    SqrtLift lift = sqrt_lift(edge_vectors(square_half()));
    PlaneBasis raw = quaternion_complement_raw(lift);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(cf.first[k] - raw.first[k]) < 1e-12);
        CHECK(std::abs(cf.second[k] - raw.second[k]) < 1e-12);
    }
}

TEST_CASE("closed-form basis matches the quaternion products per class") {
    Rng rng(223);
    for (auto cls : {ShapeClass::Convex, ShapeClass::NonConvexSimple,
                     ShapeClass::SelfIntersecting}) {
        for (int i = 0; i < 30; ++i) {
            MarkedQuadrangle q = random_in_reference_pose(cls, rng);
            PlaneBasis cf = closed_form_basis(edge_lengths(q), interior_angles(q), cls);
            PlaneBasis raw = quaternion_complement_raw(sqrt_lift(edge_vectors(q)));

            // The plane fixes h only up to a global sign.
            double sign = dot(cf.second, raw.second) < 0.0 ? -1.0 : 1.0;
            for (int k = 0; k < 4; ++k) {
                CHECK(std::abs(cf.first[k] - raw.first[k]) < 1e-9);
                CHECK(std::abs(cf.second[k] - sign * raw.second[k]) < 1e-9);
            }
            CHECK(projector_distance(cf, raw) < 1e-9);
        }
    }
}

TEST_CASE("closed-form basis rejects inconsistent angle data") {
    auto s = edge_lengths(square_half());
    auto ang = interior_angles(square_half());
    ang.angle[0] += 0.1;
    ang.half_angle[0] += 0.05;
    CHECK_THROWS_AS(closed_form_basis(s, ang, ShapeClass::Convex), InvalidClass);
    // Convex angle data never satisfies the reflex-at-C relation.
    CHECK_THROWS_AS(closed_form_basis(s, interior_angles(square_half()),
                                      ShapeClass::NonConvexSimple),
                    InvalidClass);
}

TEST_CASE("sides and angles rebuild the quadrangle") {
    Rng rng(227);
    for (auto cls : {ShapeClass::Convex, ShapeClass::NonConvexSimple,
                     ShapeClass::SelfIntersecting}) {
        for (int i = 0; i < 20; ++i) {
            MarkedQuadrangle q = random_in_reference_pose(cls, rng);
            MarkedQuadrangle again = normalize(rebuild(edge_lengths(q), interior_angles(q).angle, cls));
            for (int k = 0; k < 4; ++k)
                CHECK(distance(q.vertex(k), again.vertex(k)) < 1e-10);
        }
    }
}

TEST_CASE("edge sums verify on the fixed shapes") {
    auto rect = verify_edge_sums(rect_46());
    CHECK(rect.passed);
    CHECK(rect.max_residual() < 1e-10);

    // All dual sides of the square are 0.5, so each sum is exactly 1.
    auto sq = verify_edge_sums(square_half());
    CHECK(sq.passed);
    CHECK(sq.max_residual() < 1e-12);
}

TEST_CASE("edge sums verify on random quadrangles of every class") {
    Rng rng(229);
    for (auto cls : {ShapeClass::Convex, ShapeClass::NonConvexSimple,
                     ShapeClass::SelfIntersecting}) {
        for (int i = 0; i < 60; ++i) {
            auto rep = verify_edge_sums(random_quadrangle(cls, rng));
            CHECK(rep.passed);
            CHECK(rep.max_residual() < 1e-9);
        }
    }
}

TEST_CASE("diagonals verify") {
    auto rect = verify_diagonals(rect_46());
    CHECK(rect.passed);
    CHECK(rect.max_residual() < 1e-10);

    auto sq = verify_diagonals(square_half());
    CHECK(sq.max_residual() < 1e-12);

    Rng rng(233);
    for (auto cls : {ShapeClass::Convex, ShapeClass::NonConvexSimple,
                     ShapeClass::SelfIntersecting}) {
        for (int i = 0; i < 40; ++i)
            CHECK(verify_diagonals(random_quadrangle(cls, rng)).max_residual() < 1e-9);
    }
}

TEST_CASE("class preservation on the three reference shapes") {
    CHECK(verify_class_preservation(square_half()).passed);
    CHECK(verify_class_preservation(normalize(dart())).passed);
    CHECK(verify_class_preservation(crossed_hourglass()).passed);
}

TEST_CASE("marking invariance") {
    CHECK(verify_marking_invariance(square_half()).passed);
    Rng rng(239);
    CHECK(verify_marking_invariance(random_convex(rng)).passed);
    CHECK(verify_marking_invariance(random_quadrangle(ShapeClass::SelfIntersecting, rng)).passed);
}

TEST_CASE("involution") {
    CHECK(verify_involution(square_half()).passed);
    CHECK(verify_involution(rect_46()).passed);
    Rng rng(241);
    for (auto cls : {ShapeClass::Convex, ShapeClass::NonConvexSimple,
                     ShapeClass::SelfIntersecting})
        CHECK(verify_involution(random_quadrangle(cls, rng)).passed);
}

TEST_CASE("trapezoid closure") {
    auto rep = verify_trapezoid(normalize(trapezoid_base()));
    CHECK(rep.passed);
    CHECK(rep.max_residual() < 1e-9);

    CHECK(verify_trapezoid(rect_46()).passed);
    CHECK(is_parallelogram(dual_quadrangle(rect_46())));

    Rng rng(251);
    for (int i = 0; i < 40; ++i) {
        auto r = verify_trapezoid(random_trapezoid(rng));
        CHECK(r.passed);
        CHECK(r.max_residual() < 1e-9);
    }

    CHECK_THROWS_AS(verify_trapezoid(dart()), InvalidClass);
}

TEST_CASE("a crossed shape with a parallel pair is not a trapezoid here") {
    // The hourglass has edges 1 and 3 parallel but pointing the same way;
    // its dual carries the parallel pair on edges 2 and 4 instead.
    MarkedQuadrangle q = crossed_hourglass();
    CHECK(is_trapezoid(q) == 0);
    CHECK(is_trapezoid(dual_quadrangle(q)) == 1);
    CHECK_THROWS_AS(verify_trapezoid(q), InvalidClass);
}

TEST_CASE("parallelogram self-duality") {
    CHECK(verify_parallelogram(square_half()).passed);
    CHECK(verify_parallelogram(rect_46()).passed);

    Rng rng(257);
    for (int i = 0; i < 40; ++i) CHECK(verify_parallelogram(random_parallelogram(rng)).passed);

    CHECK_THROWS_AS(verify_parallelogram(trapezoid_base()), InvalidClass);
}

TEST_CASE("complement identities on convex quadrangles") {
    Rng rng(263);
    for (int i = 0; i < 60; ++i) {
        auto rep = verify_complement_identities(random_convex(rng));
        CHECK(rep.passed);
        CHECK(rep.max_residual() < 1e-10);
    }
}

TEST_CASE("verify_all picks the applicable reports") {
    auto reports = verify_all(square_half());
    // square: five core reports + identities + trapezoid + parallelogram
    CHECK(reports.size() == 8);
    for (const auto& r : reports) CHECK(r.passed);

    auto dart_reports = verify_all(normalize(dart()));
    CHECK(dart_reports.size() == 5);
    for (const auto& r : dart_reports) CHECK(r.passed);

    auto hourglass_reports = verify_all(crossed_hourglass());
    CHECK(hourglass_reports.size() == 5);
    for (const auto& r : hourglass_reports) CHECK(r.passed);
}
