#pragma once

#include <vector>

#include "dualquad/geometry.hpp"

namespace dualquad {

struct Circle {
    Point2 center;
    double radius = 1.0;  // must be positive
};

// Intersection points of two circles with distinct centers. Two proper
// intersections are ordered with the point on the left of the directed
// center line first; near-tangent circles (within tol.eps of the distance
// scale) collapse to one point; disjoint or nested circles yield none.
std::vector<Point2> circle_circle_intersection(const Circle& c1, const Circle& c2,
                                               Tolerance tol = {});

// The ruler-and-compass construction of the dual of a convex quadrangle:
// two circle pairs centered at A and C locate B1 (on B's side of the
// diagonal AC) and D1 (on D's side); the dual is A B1 C D1, sharing the
// diagonal AC with the normalized input.
struct CompassSteps {
    MarkedQuadrangle input;   // normalized input ABCD
    double radius_b1_a = 0.0; // |B1 A|, equals 1 - s1
    double radius_b1_c = 0.0; // |B1 C|, equals 1 - s2
    double radius_d1_a = 0.0; // |D1 A|, equals 1 - s4
    double radius_d1_c = 0.0; // |D1 C|, equals 1 - s3
    Point2 b1;
    Point2 d1;
    MarkedQuadrangle result;  // A B1 C D1
};

// Throws NotConvex for non-convex input and ConstructionFailure when a
// circle pair fails to intersect off the diagonal (impossible for a valid
// convex quadrangle).
CompassSteps compass_construction(const MarkedQuadrangle& q, Tolerance tol = {});

MarkedQuadrangle compass_dual(const MarkedQuadrangle& q, Tolerance tol = {});

} // namespace dualquad
