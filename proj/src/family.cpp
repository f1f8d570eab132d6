#include "dualquad/family.hpp"

#include <cmath>
#include <limits>

#include "dualquad/duality.hpp"

namespace dualquad {

namespace {

MarkedQuadrangle translated_to(const MarkedQuadrangle& q, Point2 anchor) {
    Point2 shift = anchor - q.vertex(0);
    auto v = q.vertices();
    for (Point2& p : v) p = p + shift;
    return MarkedQuadrangle(v);
}

MarkedQuadrangle lerp_vertices(const FamilySpec& spec, double t) {
    const auto& a = spec.start.vertices();
    const auto& b = spec.end.vertices();
    std::array<Point2, 4> v;
    v[0] = a[0];  // anchor vertex never moves
    for (int i = 1; i < 4; ++i)
        v[i] = {(1.0 - t) * a[i].x + t * b[i].x, (1.0 - t) * a[i].y + t * b[i].y};
    return MarkedQuadrangle(v);
}

} // namespace

FamilySpec::FamilySpec(const MarkedQuadrangle& start_, const MarkedQuadrangle& end_, int steps_)
    : start(start_), end(translated_to(end_, start_.vertex(0))), steps(steps_) {
    if (steps < 2) throw std::invalid_argument("FamilySpec: steps must be at least 2");
    edge_vectors(start);  // both endpoints must be non-degenerate
    edge_vectors(end);
}

MarkedQuadrangle interpolate(const FamilySpec& spec, double t, Tolerance tol) {
    if (!(t >= 0.0) || !(t <= 1.0))
        throw std::invalid_argument("interpolate: t must lie in [0, 1]");
    MarkedQuadrangle raw = lerp_vertices(spec, t);
    double margin = collinearity_margin(raw);
    if (margin <= tol.eps)
        throw DegenerateAtT(t, margin, "interpolate: degenerate quadrangle at t");
    return normalize(raw, tol);
}

SweepResult sweep(const FamilySpec& spec, Tolerance tol) {
    SweepResult result;
    result.records.reserve(spec.steps);
    for (int i = 0; i < spec.steps; ++i) {
        double t = static_cast<double>(i) / (spec.steps - 1);
        MarkedQuadrangle raw = lerp_vertices(spec, t);

        SweepRecord rec;
        rec.t = t;
        rec.margin = collinearity_margin(raw);
        rec.dual_margin = std::numeric_limits<double>::quiet_NaN();
        if (rec.margin > tol.eps) {
            rec.shape = classify(raw, tol);
            MarkedQuadrangle nq = normalize(raw, tol);
            MarkedQuadrangle raw_dual =
                quadrangle_from_basis(quaternion_complement(sqrt_lift(edge_vectors(nq, tol), tol)));
            rec.dual_margin = collinearity_margin(raw_dual);
            if (rec.dual_margin > tol.eps) rec.dual_shape = classify(raw_dual, tol);
        }
        result.records.push_back(rec);
    }
    return result;
}

} // namespace dualquad
