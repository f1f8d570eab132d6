#pragma once

#include <optional>
#include <vector>

#include "dualquad/geometry.hpp"

namespace dualquad {

// A linear path between two quadrangles: the first vertex stays fixed, the
// other three move on straight lines. The end shape is translated on
// construction so that its first vertex coincides with the start's.
struct FamilySpec {
    FamilySpec(const MarkedQuadrangle& start, const MarkedQuadrangle& end, int steps);

    MarkedQuadrangle start;
    MarkedQuadrangle end;
    int steps;  // >= 2
};

// The shape at parameter t in [0, 1], renormalized to perimeter 2 in
// canonical pose. Throws DegenerateAtT when the interpolant is degenerate.
MarkedQuadrangle interpolate(const FamilySpec& spec, double t, Tolerance tol = {});

struct SweepRecord {
    double t = 0.0;
    double margin = 0.0;                    // collinearity margin of the interpolant
    std::optional<ShapeClass> shape;        // empty when degenerate at t
    double dual_margin = 0.0;               // NaN when the dual was not computed
    std::optional<ShapeClass> dual_shape;   // empty when the dual is degenerate
};

struct SweepResult {
    std::vector<SweepRecord> records;  // one per step, t ascending 0 to 1
};

// Evaluate the family at `steps` uniformly spaced parameters, classifying
// the shape and its dual at each. Degeneracies along the way are recorded,
// never thrown.
SweepResult sweep(const FamilySpec& spec, Tolerance tol = {});

} // namespace dualquad
