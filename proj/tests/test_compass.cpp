#include <doctest.h>

#include <cmath>

#include "dualquad/compass.hpp"
#include "dualquad/duality.hpp"
#include "dualquad/sampling.hpp"
#include "fixtures.hpp"

using namespace dualquad;
using namespace fixtures;

TEST_CASE("circle intersections of the equilateral setup") {
    auto pts = circle_circle_intersection({{0, 0}, 1.0}, {{1, 0}, 1.0});
    REQUIRE(pts.size() == 2);
    double h = std::sqrt(3.0) / 2.0;
    // Left of the directed center line comes first.
    CHECK(std::abs(pts[0].x - 0.5) < 1e-12);
    CHECK(std::abs(pts[0].y - h) < 1e-12);
    CHECK(std::abs(pts[1].x - 0.5) < 1e-12);
    CHECK(std::abs(pts[1].y + h) < 1e-12);
}

TEST_CASE("tangent circles intersect in one point") {
    auto pts = circle_circle_intersection({{0, 0}, 0.5}, {{1, 0}, 0.5});
    REQUIRE(pts.size() == 1);
    CHECK(std::abs(pts[0].x - 0.5) < 1e-12);
    CHECK(std::abs(pts[0].y) < 1e-12);
}

TEST_CASE("distant and nested circles do not intersect") {
    CHECK(circle_circle_intersection({{0, 0}, 1.0}, {{3, 0}, 1.0}).empty());
    CHECK(circle_circle_intersection({{0, 0}, 2.0}, {{0.1, 0}, 0.5}).empty());
}

TEST_CASE("circle intersection rejects bad arguments") {
    CHECK_THROWS_AS(circle_circle_intersection({{0, 0}, 1.0}, {{0, 0}, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(circle_circle_intersection({{0, 0}, 0.0}, {{1, 0}, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("compass dual of the square reproduces the square") {
    CompassSteps steps = compass_construction(square_half());
    CHECK(steps.radius_b1_a == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(steps.radius_b1_c == doctest::Approx(0.5).epsilon(1e-12));
    MarkedQuadrangle n = normalize(square_half());
    CHECK(distance(steps.b1, n.vertex(1)) < 1e-12);
    CHECK(distance(steps.d1, n.vertex(3)) < 1e-12);
}

TEST_CASE("compass dual of the rectangle matches the algebraic dual") {
    MarkedQuadrangle via_compass = compass_dual(rect_46());
    MarkedQuadrangle algebraic = dual_quadrangle(rect_46());
    CongruenceReport rep = congruent(via_compass, algebraic, Tolerance(1e-8), true);
    CHECK(rep.congruent);
    CHECK(rep.max_vertex_distance < 1e-9);
}

TEST_CASE("compass radii equal one minus the side lengths") {
    Rng rng(307);
    for (int i = 0; i < 30; ++i) {
        MarkedQuadrangle q = random_convex(rng);
        CompassSteps steps = compass_construction(q);
        auto s = edge_lengths(steps.input);
        CHECK(steps.radius_b1_a == doctest::Approx(1.0 - s[0]).epsilon(1e-12));
        CHECK(steps.radius_b1_c == doctest::Approx(1.0 - s[1]).epsilon(1e-12));
        CHECK(steps.radius_d1_a == doctest::Approx(1.0 - s[3]).epsilon(1e-12));
        CHECK(steps.radius_d1_c == doctest::Approx(1.0 - s[2]).epsilon(1e-12));
    }
}

TEST_CASE("compass dual shares the diagonal and matches the algebraic dual") {
    Rng rng(311);
    for (int i = 0; i < 30; ++i) {
        MarkedQuadrangle q = random_convex(rng);
        CompassSteps steps = compass_construction(q);

        CHECK(steps.result.vertex(0) == steps.input.vertex(0));
        CHECK(steps.result.vertex(2) == steps.input.vertex(2));

        MarkedQuadrangle algebraic = dual_quadrangle(q);
        CHECK(diagonal_lengths(steps.result)[0] ==
              doctest::Approx(diagonal_lengths(algebraic)[0]).epsilon(1e-9));

        CongruenceReport rep = congruent(steps.result, algebraic, Tolerance(1e-8), true);
        CHECK(rep.congruent);
        CHECK(rep.max_vertex_distance < 1e-9);
    }
}

TEST_CASE("compass construction rejects non-convex input") {
    CHECK_THROWS_AS(compass_dual(dart()), NotConvex);
    CHECK_THROWS_AS(compass_dual(crossed_square()), NotConvex);
}
