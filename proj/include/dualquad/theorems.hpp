#pragma once

#include <string>
#include <vector>

#include "dualquad/duality.hpp"

namespace dualquad {

// Unsigned interior angles at the four vertices, in (0, pi), plus their
// halves (the variables of the closed-form complement bases).
struct AngleData {
    std::array<double, 4> angle;
    std::array<double, 4> half_angle;
};

AngleData interior_angles(const MarkedQuadrangle& q, Tolerance tol = {});

// Closed-form complement basis (g, h) evaluated from side lengths and
// half-angles alone, one formula per shape class in its reference pose
// (convex; non-convex with the reflex corner at the third vertex; crossed
// with the second and fourth edges intersecting). The pair is orthogonal
// with |g| = |h| = sqrt(1-s1), not orthonormal.
// Throws InvalidClass when the angle data cannot belong to the stated class
// (each class pins one linear relation among the four angles).
PlaneBasis closed_form_basis(const std::array<double, 4>& sides,
                             const AngleData& angles, ShapeClass cls);

struct TheoremReport {
    std::string name;
    std::vector<double> residuals;
    double tolerance = 0.0;
    bool passed = false;

    double max_residual() const;
};

// Residuals |s_k + s_k' - 1| between the sides of the normalized input and
// the sides of its dual, in marked order.
TheoremReport verify_edge_sums(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// Residuals between the two diagonal lengths of the normalized input and of
// its dual.
TheoremReport verify_diagonals(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// Residual 0 when the dual has the same shape class as the input, 1
// otherwise.
TheoremReport verify_class_preservation(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// Duals under all 8 markings of the input, pairwise congruence distances
// (relabeling allowed).
TheoremReport verify_marking_invariance(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// Congruence distance between the dual of the dual and the normalized
// input, no relabeling.
TheoremReport verify_involution(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// For a simple trapezoid input: relative cross product of the dual's
// opposite edge pair with the same index as the input's parallel pair.
// Throws InvalidClass when the input has no parallel pair or is crossed
// (a crossed shape with a parallel pair carries it on the other index
// after dualization).
TheoremReport verify_trapezoid(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// For a parallelogram input: congruence distance to the dual (relabeling
// allowed) and the residuals |s'_k - s_{k+1}| of the one-step side shift.
// Throws InvalidClass when the input is not a parallelogram.
TheoremReport verify_parallelogram(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// Algebraic identities tying the raw complement basis to side lengths and
// the first diagonal:
//   g2^2 + h2^2 = (1-s1)(1-s2)
//   |g1^2 + (g2 + i h2)^2| = (1-s1) |AC|
TheoremReport verify_complement_identities(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

// Every verifier applicable to q: the first five always, the identity check
// for convex inputs, the trapezoid/parallelogram checks when the input
// qualifies.
std::vector<TheoremReport> verify_all(const MarkedQuadrangle& q, Tolerance tol = Tolerance(1e-8));

} // namespace dualquad
