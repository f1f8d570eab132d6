#pragma once

#include <array>
#include <complex>
#include <optional>

#include "dualquad/errors.hpp"

namespace dualquad {

using Complex = std::complex<double>;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 p, Point2 q) { return p.x == q.x && p.y == q.y; }

inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
double norm(Point2 p);
double distance(Point2 p, Point2 q);

inline Complex to_complex(Point2 p) { return {p.x, p.y}; }
inline Point2 to_point(Complex z) { return {z.real(), z.imag()}; }

// Relative scale for collinearity and congruence thresholds.
struct Tolerance {
    double eps = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double e);  // requires 0 < e < 1e-3
};

enum class ShapeClass {
    Convex,
    NonConvexSimple,
    SelfIntersecting,
};

const char* to_string(ShapeClass c);

// A plane quadrangle with a marked first vertex and a fixed traversal
// direction. Vertices are stored in traversal order; vertex 0 is the mark.
// Construction only checks that coordinates are finite and the perimeter is
// positive; degeneracy (collinear successive edges) is checked by the
// operations that require it, so that near-degenerate shapes can still be
// measured.
class MarkedQuadrangle {
public:
    MarkedQuadrangle(Point2 a, Point2 b, Point2 c, Point2 d);
    explicit MarkedQuadrangle(const std::array<Point2, 4>& vs);

    const std::array<Point2, 4>& vertices() const { return v_; }
    Point2 vertex(int i) const { return v_[((i % 4) + 4) % 4]; }

    double perimeter() const;

    // The same cyclic quadrangle with the mark moved forward by `shift`
    // vertices; `reverse` additionally flips the traversal direction while
    // keeping the shifted vertex first. The 8 combinations enumerate every
    // marking of the underlying cyclic shape.
    MarkedQuadrangle remarked(int shift, bool reverse) const;

private:
    std::array<Point2, 4> v_;
};

// Edge vectors as complex numbers, z[k] = vertex k+1 - vertex k cyclically.
// The closing edge is computed as -(z0+z1+z2) so the sum is exactly zero.
struct EdgeVectors {
    std::array<Complex, 4> z;
};

// Throws DegenerateInput when two successive edges are collinear within
// tol.eps relative scale.
EdgeVectors edge_vectors(const MarkedQuadrangle& q, Tolerance tol = {});

// min over k of |z_k x z_{k+1}| / (|z_k| |z_{k+1}|); zero for a zero-length
// edge. Scale and pose invariant, continuous in the vertices.
double collinearity_margin(const MarkedQuadrangle& q);

// Translate/rotate/scale so the first vertex is at the origin, the second on
// the positive x axis and the perimeter is 2. No reflection.
MarkedQuadrangle canonical_pose(const MarkedQuadrangle& q, Tolerance tol = {});

// canonical_pose plus a reflection, when needed, that puts the third vertex
// in the open upper half-plane. Idempotent.
MarkedQuadrangle normalize(const MarkedQuadrangle& q, Tolerance tol = {});

// Convex when the four cyclic edge cross products share one sign;
// SelfIntersecting when a pair of opposite open edges properly crosses;
// NonConvexSimple otherwise. Throws DegenerateInput.
ShapeClass classify(const MarkedQuadrangle& q, Tolerance tol = {});

std::array<double, 4> edge_lengths(const MarkedQuadrangle& q);

// |AC|, |BD|.
std::array<double, 2> diagonal_lengths(const MarkedQuadrangle& q);

// Index of the parallel opposite-edge pair: 0 for edges AB,CD; 1 for edges
// BC,DA; nullopt when neither. A parallelogram reports 0.
std::optional<int> is_trapezoid(const MarkedQuadrangle& q, Tolerance tol = {});

bool is_parallelogram(const MarkedQuadrangle& q, Tolerance tol = {});

} // namespace dualquad
