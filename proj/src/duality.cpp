#include "dualquad/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dualquad {

double dot(const Vec4& u, const Vec4& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

double norm(const Vec4& u) { return std::sqrt(dot(u, u)); }

static Vec4 scaled(const Vec4& u, double s) {
    return {u[0] * s, u[1] * s, u[2] * s, u[3] * s};
}

SqrtLift sqrt_lift(const EdgeVectors& ev, Tolerance tol) {
    const auto& z = ev.z;
    SqrtLift lift;
    lift.u[0] = std::sqrt(z[0]);
    for (int k = 0; k < 3; ++k) {
        double sk = std::abs(z[k]);
        double sk1 = std::abs(z[k + 1]);
        if (sk == 0.0 || sk1 == 0.0)
            throw DegenerateInput("sqrt_lift: zero-length edge");
        double theta = std::arg(z[k + 1] / z[k]);  // principal, in (-pi, pi]
        if (std::abs(std::sin(theta)) <= tol.eps)
            throw DegenerateInput("sqrt_lift: collinear successive edges");
        lift.u[k + 1] = lift.u[k] * std::polar(std::sqrt(sk1 / sk), theta / 2.0);
    }
    for (int k = 0; k < 4; ++k) {
        lift.a[k] = lift.u[k].real();
        lift.b[k] = lift.u[k].imag();
    }
    return lift;
}

namespace {

struct Quaternion {
    double w, x, y, z;
};

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

Vec4 as_vec(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

} // namespace

PlaneBasis quaternion_complement_raw(const SqrtLift& lift) {
    if (std::abs(lift.b[0]) > 1e-9)
        throw std::invalid_argument("quaternion_complement: lift must come from a canonical-pose quadrangle");
    Quaternion a{lift.a[0], lift.a[1], lift.a[2], lift.a[3]};
    Quaternion b{lift.b[0], lift.b[1], lift.b[2], lift.b[3]};
    Quaternion v{0.0, lift.a[1], lift.a[2], lift.a[3]};
    return {as_vec(a * v), as_vec(b * v)};
}

PlaneBasis quaternion_complement(const SqrtLift& lift) {
    PlaneBasis raw = quaternion_complement_raw(lift);
    double s1 = std::norm(lift.u[0]);
    double inv = 1.0 / std::sqrt(1.0 - s1);
    return {scaled(raw.first, inv), scaled(raw.second, inv)};
}

PlaneBasis generic_complement(const PlaneBasis& basis) {
    const Vec4& a = basis.first;
    const Vec4& b = basis.second;

    std::array<Vec4, 4> residual;
    std::array<double, 4> rnorm;
    for (int i = 0; i < 4; ++i) {
        Vec4 e{0, 0, 0, 0};
        e[i] = 1.0;
        double ea = dot(e, a), eb = dot(e, b);
        for (int j = 0; j < 4; ++j) residual[i][j] = e[j] - ea * a[j] - eb * b[j];
        rnorm[i] = norm(residual[i]);
    }

    // Two largest residuals, ties to the lower index.
    int i1 = 0;
    for (int i = 1; i < 4; ++i)
        if (rnorm[i] > rnorm[i1]) i1 = i;
    int i2 = -1;
    for (int i = 0; i < 4; ++i) {
        if (i == i1) continue;
        if (i2 < 0 || rnorm[i] > rnorm[i2]) i2 = i;
    }
    if (i2 < i1) std::swap(i1, i2);

    Vec4 c = scaled(residual[i1], 1.0 / rnorm[i1]);
    Vec4 d = residual[i2];
    double dc = dot(d, c);
    for (int j = 0; j < 4; ++j) d[j] -= dc * c[j];
    return {c, scaled(d, 1.0 / norm(d))};
}

double projector_distance(const PlaneBasis& p, const PlaneBasis& q) {
    Vec4 pc = scaled(p.first, 1.0 / norm(p.first));
    Vec4 pd = scaled(p.second, 1.0 / norm(p.second));
    Vec4 qc = scaled(q.first, 1.0 / norm(q.first));
    Vec4 qd = scaled(q.second, 1.0 / norm(q.second));
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double d = pc[i] * pc[j] + pd[i] * pd[j] - qc[i] * qc[j] - qd[i] * qd[j];
            sum += d * d;
        }
    return std::sqrt(sum);
}

MarkedQuadrangle quadrangle_from_basis(const PlaneBasis& basis) {
    Vec4 c = scaled(basis.first, 1.0 / norm(basis.first));
    Vec4 d = scaled(basis.second, 1.0 / norm(basis.second));
    std::array<Point2, 4> v;
    Complex pos = 0.0;
    for (int k = 0; k < 4; ++k) {
        v[k] = to_point(pos);
        Complex w = Complex(c[k], d[k]);
        pos += w * w;
    }
    return MarkedQuadrangle(v);
}

MarkedQuadrangle dual_quadrangle(const MarkedQuadrangle& q, Tolerance tol) {
    MarkedQuadrangle nq = normalize(q, tol);
    SqrtLift lift = sqrt_lift(edge_vectors(nq, tol), tol);
    MarkedQuadrangle raw = quadrangle_from_basis(quaternion_complement(lift));
    if (collinearity_margin(raw) <= tol.eps)
        throw DegenerateDual("dual quadrangle is degenerate");
    return normalize(raw, tol);
}

CongruenceReport congruent(const MarkedQuadrangle& q1, const MarkedQuadrangle& q2,
                           Tolerance tol, bool allow_relabel) {
    Tolerance gate;  // default collinearity eps for the pose computations
    MarkedQuadrangle p1 = canonical_pose(q1, gate);

    CongruenceReport best;
    best.max_vertex_distance = std::numeric_limits<double>::infinity();

    // Plain cyclic shifts are tried before reflected and reversed markings,
    // so a symmetric shape reports the least-transformed match. Strict
    // improvement beyond rounding keeps the choice deterministic.
    const int shifts = allow_relabel ? 4 : 1;
    for (int rev = 0; rev < (allow_relabel ? 2 : 1); ++rev) {
        for (int refl = 0; refl < 2; ++refl) {
            for (int shift = 0; shift < shifts; ++shift) {
                MarkedQuadrangle p2 = canonical_pose(q2.remarked(shift, rev != 0), gate);
                double d = 0.0;
                for (int k = 0; k < 4; ++k) {
                    Point2 w = p2.vertex(k);
                    if (refl) w.y = -w.y;
                    d = std::max(d, distance(p1.vertex(k), w));
                }
                if (d + 1e-14 < best.max_vertex_distance) {
                    best.max_vertex_distance = d;
                    best.reflected = refl != 0;
                    best.direction_reversed = rev != 0;
                    if (allow_relabel) best.relabel_shift = shift;
                }
            }
        }
    }
    best.congruent = best.max_vertex_distance <= tol.eps * 2.0;
    return best;
}

} // namespace dualquad
