#pragma once

#include <array>
#include <optional>

#include "dualquad/geometry.hpp"

namespace dualquad {

using Vec4 = std::array<double, 4>;

double dot(const Vec4& u, const Vec4& v);
double norm(const Vec4& u);

// Square roots u_k of the edge vectors, chosen so that each rotation from
// u_k to u_{k+1} goes the same way as the rotation from z_k to z_{k+1}
// (half the principal angle between successive edges). For a quadrangle of
// perimeter 2 the component vectors a = Re u and b = Im u are orthonormal
// in R^4.
struct SqrtLift {
    std::array<Complex, 4> u;
    Vec4 a;
    Vec4 b;
};

// u_0 is the principal square root of z_0; for edges of a quadrangle in
// canonical pose (z_0 real positive) that is the positive real root.
// Throws DegenerateInput when an edge has zero length or two successive
// edges are collinear (the half-angle step is then ill-defined).
SqrtLift sqrt_lift(const EdgeVectors& z, Tolerance tol = {});

// Ordered basis of a 2-plane in R^4. Orthonormal for every producer except
// closed_form_basis and quaternion_complement_raw, which return the raw
// orthogonal pair of common length sqrt(1-s1).
struct PlaneBasis {
    Vec4 first;
    Vec4 second;
};

// Basis (g, h) of the orthogonal complement of span(a, b), obtained as the
// quaternion products g = a*v and h = b*v with v = (0, a2, a3, a4):
//   g = (s1-1, a1*a2, a1*a3, a1*a4)
//   h = (0, b3*a4 - b4*a3, b4*a2 - b2*a4, b2*a3 - b3*a2)
// Both have length sqrt(1-s1). Requires a lift from a canonical-pose
// quadrangle (b1 = 0).
PlaneBasis quaternion_complement_raw(const SqrtLift& lift);

// quaternion_complement_raw scaled to an orthonormal basis.
PlaneBasis quaternion_complement(const SqrtLift& lift);

// Independent orthocomplement: project the standard basis vectors of R^4
// onto the complement of the input span, keep the two with the largest
// residuals (ties broken by lower index) and orthonormalize them in index
// order. Input must be orthonormal.
PlaneBasis generic_complement(const PlaneBasis& basis);

// Frobenius distance between the orthogonal projectors onto the two spans.
// Basis vectors are unit-scaled internally, so raw (g, h) pairs compare
// fine; each input pair must be orthogonal.
double projector_distance(const PlaneBasis& p, const PlaneBasis& q);

// The quadrangle whose edge vectors are w_k = (c_k + i d_k)^2, with
// vertices at the cumulative sums starting from the origin. For an
// orthonormal basis the result closes up exactly and has perimeter 2.
// Basis vectors are unit-scaled internally.
MarkedQuadrangle quadrangle_from_basis(const PlaneBasis& basis);

// The dual quadrangle: normalize, lift, take the orthocomplement basis and
// square it back into the plane. The result is returned in canonical pose.
// Throws DegenerateInput for degenerate q and DegenerateDual when the
// constructed dual itself is degenerate.
MarkedQuadrangle dual_quadrangle(const MarkedQuadrangle& q, Tolerance tol = {});

struct CongruenceReport {
    bool congruent = false;
    double max_vertex_distance = 0.0;
    bool reflected = false;
    std::optional<int> relabel_shift;  // engaged only when relabeling was allowed
    bool direction_reversed = false;
};

// Compare two quadrangles up to rotation, translation and uniform scale by
// putting both in canonical pose, trying the identity and the reflection
// about the x axis. With allow_relabel the 4 cyclic shifts and 2 traversal
// directions of q2's marking are tried as well. congruent holds when the
// best max vertex distance is at most tol.eps times the (posed) perimeter.
CongruenceReport congruent(const MarkedQuadrangle& q1, const MarkedQuadrangle& q2,
                           Tolerance tol = Tolerance(1e-8), bool allow_relabel = false);

} // namespace dualquad
