#include "dualquad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dualquad {

double norm(Point2 p) { return std::hypot(p.x, p.y); }
double distance(Point2 p, Point2 q) { return norm(p - q); }

Tolerance::Tolerance(double e) : eps(e) {
    if (!(e > 0.0) || !(e < 1e-3))
        throw std::invalid_argument("Tolerance: eps must lie in (0, 1e-3)");
}

const char* to_string(ShapeClass c) {
    switch (c) {
        case ShapeClass::Convex: return "convex";
        case ShapeClass::NonConvexSimple: return "non-convex-simple";
        case ShapeClass::SelfIntersecting: return "self-intersecting";
    }
    return "?";
}

MarkedQuadrangle::MarkedQuadrangle(Point2 a, Point2 b, Point2 c, Point2 d)
    : MarkedQuadrangle(std::array<Point2, 4>{a, b, c, d}) {}

MarkedQuadrangle::MarkedQuadrangle(const std::array<Point2, 4>& vs) : v_(vs) {
    for (const Point2& p : v_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("MarkedQuadrangle: coordinates must be finite");
    if (!(perimeter() > 0.0))
        throw std::invalid_argument("MarkedQuadrangle: perimeter must be positive");
}

double MarkedQuadrangle::perimeter() const {
    double p = 0.0;
    for (int k = 0; k < 4; ++k) p += distance(v_[k], v_[(k + 1) % 4]);
    return p;
}

MarkedQuadrangle MarkedQuadrangle::remarked(int shift, bool reverse) const {
    std::array<Point2, 4> w;
    for (int i = 0; i < 4; ++i) {
        int j = reverse ? (shift - i + 8) % 4 : (shift + i) % 4;
        w[i] = v_[j];
    }
    return MarkedQuadrangle(w);
}

static std::array<Complex, 4> raw_edges(const MarkedQuadrangle& q) {
    const auto& v = q.vertices();
    std::array<Complex, 4> z;
    for (int k = 0; k < 3; ++k) z[k] = to_complex(v[k + 1]) - to_complex(v[k]);
    z[3] = -(z[0] + z[1] + z[2]);  // closes the cycle exactly
    return z;
}

static double margin_of(const std::array<Complex, 4>& z) {
    double m = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4; ++k) {
        const Complex& a = z[k];
        const Complex& b = z[(k + 1) % 4];
        double denom = std::abs(a) * std::abs(b);
        double c = a.real() * b.imag() - a.imag() * b.real();
        m = std::min(m, denom > 0.0 ? std::abs(c) / denom : 0.0);
    }
    return m;
}

double collinearity_margin(const MarkedQuadrangle& q) {
    return margin_of(raw_edges(q));
}

EdgeVectors edge_vectors(const MarkedQuadrangle& q, Tolerance tol) {
    auto z = raw_edges(q);
    if (margin_of(z) <= tol.eps)
        throw DegenerateInput("quadrangle has collinear successive edges");
    return EdgeVectors{z};
}

MarkedQuadrangle canonical_pose(const MarkedQuadrangle& q, Tolerance tol) {
    edge_vectors(q, tol);  // degeneracy gate
    const auto& v = q.vertices();
    Complex origin = to_complex(v[0]);
    Complex first_edge = to_complex(v[1]) - origin;
    double len = std::abs(first_edge);
    Complex spin = std::conj(first_edge) / len;
    double scale = 2.0 / q.perimeter();

    std::array<Point2, 4> w;
    w[0] = {0.0, 0.0};
    w[1] = {len * scale, 0.0};
    for (int i : {2, 3}) w[i] = to_point((to_complex(v[i]) - origin) * spin * scale);
    return MarkedQuadrangle(w);
}

MarkedQuadrangle normalize(const MarkedQuadrangle& q, Tolerance tol) {
    MarkedQuadrangle posed = canonical_pose(q, tol);
    auto w = posed.vertices();
    if (w[2].y < 0.0) {
        for (Point2& p : w) p.y = -p.y;
        w[0].y = 0.0;  // keep the on-axis vertices free of negative zeros
        w[1].y = 0.0;
        return MarkedQuadrangle(w);
    }
    return posed;
}

// Strict test: open segments cross in a single interior point.
static bool properly_cross(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
    double d1 = cross(p2 - p1, p3 - p1);
    double d2 = cross(p2 - p1, p4 - p1);
    double d3 = cross(p4 - p3, p1 - p3);
    double d4 = cross(p4 - p3, p2 - p3);
    return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

ShapeClass classify(const MarkedQuadrangle& q, Tolerance tol) {
    auto z = edge_vectors(q, tol).z;

    bool all_pos = true, all_neg = true;
    for (int k = 0; k < 4; ++k) {
        const Complex& a = z[k];
        const Complex& b = z[(k + 1) % 4];
        double c = a.real() * b.imag() - a.imag() * b.real();
        (c > 0.0 ? all_neg : all_pos) = false;
    }
    if (all_pos || all_neg) return ShapeClass::Convex;

    const auto& v = q.vertices();
    if (properly_cross(v[0], v[1], v[2], v[3]) || properly_cross(v[1], v[2], v[3], v[0]))
        return ShapeClass::SelfIntersecting;
    return ShapeClass::NonConvexSimple;
}

std::array<double, 4> edge_lengths(const MarkedQuadrangle& q) {
    auto z = raw_edges(q);
    return {std::abs(z[0]), std::abs(z[1]), std::abs(z[2]), std::abs(z[3])};
}

std::array<double, 2> diagonal_lengths(const MarkedQuadrangle& q) {
    const auto& v = q.vertices();
    return {distance(v[0], v[2]), distance(v[1], v[3])};
}

std::optional<int> is_trapezoid(const MarkedQuadrangle& q, Tolerance tol) {
    auto z = raw_edges(q);
    for (int pair = 0; pair < 2; ++pair) {
        const Complex& a = z[pair];
        const Complex& b = z[pair + 2];
        double c = a.real() * b.imag() - a.imag() * b.real();
        if (std::abs(c) <= tol.eps * std::abs(a) * std::abs(b)) return pair;
    }
    return std::nullopt;
}

bool is_parallelogram(const MarkedQuadrangle& q, Tolerance tol) {
    auto z = raw_edges(q);
    for (int pair = 0; pair < 2; ++pair) {
        const Complex& a = z[pair];
        const Complex& b = z[pair + 2];
        double c = a.real() * b.imag() - a.imag() * b.real();
        if (std::abs(c) > tol.eps * std::abs(a) * std::abs(b)) return false;
    }
    return true;
}

} // namespace dualquad
