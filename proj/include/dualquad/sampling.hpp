#pragma once

#include <random>

#include "dualquad/geometry.hpp"

namespace dualquad {

using Rng = std::mt19937_64;

// Rejection-sampled random quadrangle of the requested class with a
// collinearity margin of at least min_margin. Deterministic for a given
// generator state.
MarkedQuadrangle random_quadrangle(ShapeClass cls, Rng& rng, double min_margin = 1e-3);

MarkedQuadrangle random_convex(Rng& rng, double min_margin = 1e-3);
MarkedQuadrangle random_parallelogram(Rng& rng, double min_margin = 1e-3);

// AB parallel to CD, the pair lengths kept apart so exactly one pair is
// parallel.
MarkedQuadrangle random_trapezoid(Rng& rng, double min_margin = 1e-3);

// True when the normalized quadrangle sits in the reference pose of its
// class, i.e. the directions of its edges match the side-and-angle forms
// that the closed-form complement basis assumes (convex pose; non-convex
// pose with the reflex corner at the third vertex; crossed pose with the
// second and fourth edges intersecting).
bool in_reference_pose(const MarkedQuadrangle& normalized_q, ShapeClass cls,
                       double angle_tol = 1e-7);

// Random quadrangle of the class remarked and normalized into its reference
// pose.
MarkedQuadrangle random_in_reference_pose(ShapeClass cls, Rng& rng, double min_margin = 1e-3);

} // namespace dualquad
