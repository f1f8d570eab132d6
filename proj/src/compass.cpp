#include "dualquad/compass.hpp"

#include <cmath>

namespace dualquad {

std::vector<Point2> circle_circle_intersection(const Circle& c1, const Circle& c2,
                                               Tolerance tol) {
    if (!(c1.radius > 0.0) || !(c2.radius > 0.0))
        throw std::invalid_argument("circle_circle_intersection: radii must be positive");
    Point2 delta = c2.center - c1.center;
    double d = norm(delta);
    if (d == 0.0)
        throw std::invalid_argument("circle_circle_intersection: centers must be distinct");

    double window = tol.eps * (d + c1.radius + c2.radius);
    double outer = d - (c1.radius + c2.radius);
    double inner = std::abs(c1.radius - c2.radius) - d;

    Point2 dir = (1.0 / d) * delta;
    double along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    Point2 foot = c1.center + along * dir;

    if (std::abs(outer) <= window || std::abs(inner) <= window)
        return {foot};  // tangent
    if (outer > 0.0 || inner > 0.0)
        return {};

    double off = std::sqrt(std::max(c1.radius * c1.radius - along * along, 0.0));
    Point2 left{-dir.y, dir.x};
    return {foot + off * left, foot - off * left};
}

namespace {

// The intersection point on the same side of the directed line AC as the
// reference point.
Point2 pick_side(const std::vector<Point2>& pts, Point2 a, Point2 c, Point2 ref,
                 const char* label) {
    double want = cross(c - a, ref - a);
    for (const Point2& p : pts) {
        double side = cross(c - a, p - a);
        if (side * want > 0.0) return p;
    }
    throw ConstructionFailure(std::string("compass construction: no intersection for ") +
                              label + " off the diagonal");
}

} // namespace

CompassSteps compass_construction(const MarkedQuadrangle& q, Tolerance tol) {
    if (classify(q, tol) != ShapeClass::Convex)
        throw NotConvex("compass construction requires a convex quadrangle");

    MarkedQuadrangle input = normalize(q, tol);
    auto s = edge_lengths(input);
    double rb_a = (s[1] + s[2] + s[3] - s[0]) / 2.0;
    double rb_c = (s[0] + s[2] + s[3] - s[1]) / 2.0;
    double rd_a = (s[0] + s[1] + s[2] - s[3]) / 2.0;
    double rd_c = (s[0] + s[1] + s[3] - s[2]) / 2.0;

    const auto& v = input.vertices();
    auto around_b = circle_circle_intersection({v[0], rb_a}, {v[2], rb_c}, tol);
    auto around_d = circle_circle_intersection({v[0], rd_a}, {v[2], rd_c}, tol);
    if (around_b.empty() || around_d.empty())
        throw ConstructionFailure("compass construction: circles do not intersect");

    Point2 b1 = pick_side(around_b, v[0], v[2], v[1], "B1");
    Point2 d1 = pick_side(around_d, v[0], v[2], v[3], "D1");
    return CompassSteps{input, rb_a, rb_c, rd_a, rd_c, b1, d1,
                        MarkedQuadrangle(v[0], b1, v[2], d1)};
}

MarkedQuadrangle compass_dual(const MarkedQuadrangle& q, Tolerance tol) {
    return compass_construction(q, tol).result;
}

} // namespace dualquad
