#include "dualquad/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dualquad {

namespace {

constexpr double kPi = std::numbers::pi;

TheoremReport make_report(std::string name, std::vector<double> residuals, double tolerance) {
    TheoremReport r;
    r.name = std::move(name);
    r.residuals = std::move(residuals);
    r.tolerance = tolerance;
    r.passed = std::all_of(r.residuals.begin(), r.residuals.end(),
                           [&](double x) { return x <= tolerance; });
    return r;
}

} // namespace

double TheoremReport::max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

AngleData interior_angles(const MarkedQuadrangle& q, Tolerance tol) {
    edge_vectors(q, tol);  // degeneracy gate
    const auto& v = q.vertices();
    AngleData out;
    for (int k = 0; k < 4; ++k) {
        Point2 to_prev = v[(k + 3) % 4] - v[k];
        Point2 to_next = v[(k + 1) % 4] - v[k];
        out.angle[k] = std::atan2(std::abs(cross(to_next, to_prev)), dot(to_next, to_prev));
        out.half_angle[k] = out.angle[k] / 2.0;
    }
    return out;
}

PlaneBasis closed_form_basis(const std::array<double, 4>& s,
                             const AngleData& angles, ShapeClass cls) {
    for (double len : s)
        if (!(len > 0.0)) throw InvalidClass("closed_form_basis: sides must be positive");
    const auto& beta = angles.angle;
    for (double b : beta)
        if (!(b > 0.0) || !(b < kPi))
            throw InvalidClass("closed_form_basis: angles must lie in (0, pi)");

    // One linear relation among the angles per class; reject inconsistent data.
    double relation = 0.0;
    switch (cls) {
        case ShapeClass::Convex:
            relation = beta[0] + beta[1] + beta[2] + beta[3] - 2.0 * kPi;
            break;
        case ShapeClass::NonConvexSimple:
            relation = beta[2] - beta[0] - beta[1] - beta[3];
            break;
        case ShapeClass::SelfIntersecting:
            relation = beta[0] + beta[1] - beta[2] - beta[3];
            break;
    }
    if (std::abs(relation) > 1e-6)
        throw InvalidClass("closed_form_basis: angle data inconsistent with class");

    const auto& g = angles.half_angle;
    double s12 = std::sqrt(s[0] * s[1]), s13 = std::sqrt(s[0] * s[2]);
    double s14 = std::sqrt(s[0] * s[3]), s34 = std::sqrt(s[2] * s[3]);
    double s24 = std::sqrt(s[1] * s[3]), s23 = std::sqrt(s[1] * s[2]);

    Vec4 gv, hv;
    switch (cls) {
        case ShapeClass::Convex:
            gv = {s[0] - 1.0, s12 * std::sin(g[1]), -s13 * std::cos(g[1] + g[2]), -s14 * std::sin(g[0])};
            hv = {0.0, -s34 * std::cos(g[3]), s24 * std::sin(g[0] + g[1]), -s23 * std::cos(g[2])};
            break;
        case ShapeClass::NonConvexSimple:
            gv = {s[0] - 1.0, s12 * std::sin(g[1]), s13 * std::cos(g[2] - g[1]), -s14 * std::sin(g[0])};
            hv = {0.0, -s34 * std::cos(g[3]), s24 * std::sin(g[0] + g[1]), s23 * std::cos(g[2])};
            break;
        case ShapeClass::SelfIntersecting:
            gv = {s[0] - 1.0, s12 * std::sin(g[1]), s13 * std::cos(g[2] - g[1]), s14 * std::sin(g[0])};
            hv = {0.0, s34 * std::cos(g[3]), -s24 * std::sin(g[0] + g[1]), s23 * std::cos(g[2])};
            break;
    }
    return {gv, hv};
}

TheoremReport verify_edge_sums(const MarkedQuadrangle& q, Tolerance tol) {
    MarkedQuadrangle nq = normalize(q);
    auto s = edge_lengths(nq);
    auto sd = edge_lengths(dual_quadrangle(nq));
    std::vector<double> res(4);
    for (int k = 0; k < 4; ++k) res[k] = std::abs(s[k] + sd[k] - 1.0);
    return make_report("edge_sums", std::move(res), tol.eps);
}

TheoremReport verify_diagonals(const MarkedQuadrangle& q, Tolerance tol) {
    MarkedQuadrangle nq = normalize(q);
    auto d = diagonal_lengths(nq);
    auto dd = diagonal_lengths(dual_quadrangle(nq));
    return make_report("diagonals",
                       {std::abs(d[0] - dd[0]), std::abs(d[1] - dd[1])}, tol.eps);
}

TheoremReport verify_class_preservation(const MarkedQuadrangle& q, Tolerance tol) {
    bool same = classify(q) == classify(dual_quadrangle(q));
    return make_report("class_preservation", {same ? 0.0 : 1.0}, tol.eps);
}

TheoremReport verify_marking_invariance(const MarkedQuadrangle& q, Tolerance tol) {
    std::vector<MarkedQuadrangle> duals;
    duals.reserve(8);
    for (int shift = 0; shift < 4; ++shift)
        for (int rev = 0; rev < 2; ++rev)
            duals.push_back(dual_quadrangle(q.remarked(shift, rev != 0)));

    std::vector<double> res;
    res.reserve(28);
    for (size_t i = 0; i < duals.size(); ++i)
        for (size_t j = i + 1; j < duals.size(); ++j)
            res.push_back(congruent(duals[i], duals[j], tol, true).max_vertex_distance);
    return make_report("marking_invariance", std::move(res), tol.eps * 2.0);
}

TheoremReport verify_involution(const MarkedQuadrangle& q, Tolerance tol) {
    MarkedQuadrangle twice = dual_quadrangle(dual_quadrangle(q));
    auto rep = congruent(twice, normalize(q), tol, false);
    return make_report("involution", {rep.max_vertex_distance}, tol.eps * 2.0);
}

TheoremReport verify_trapezoid(const MarkedQuadrangle& q, Tolerance tol) {
    auto pair = is_trapezoid(q);
    if (!pair) throw InvalidClass("verify_trapezoid: input has no parallel edge pair");
    // A crossed shape can have a parallel pair pointing the same way (the
    // equal-angle hourglass does); its dual then carries the parallel pair
    // on the other index, so the same-index closure only holds for simple
    // trapezoids.
    if (classify(q) == ShapeClass::SelfIntersecting)
        throw InvalidClass("verify_trapezoid: input must be a simple trapezoid");
    auto zd = edge_vectors(dual_quadrangle(q)).z;
    const Complex& a = zd[*pair];
    const Complex& b = zd[*pair + 2];
    double c = a.real() * b.imag() - a.imag() * b.real();
    double res = std::abs(c) / (std::abs(a) * std::abs(b));
    return make_report("trapezoid_closure", {res}, tol.eps);
}

TheoremReport verify_parallelogram(const MarkedQuadrangle& q, Tolerance tol) {
    if (!is_parallelogram(q))
        throw InvalidClass("verify_parallelogram: input is not a parallelogram");
    MarkedQuadrangle nq = normalize(q);
    MarkedQuadrangle d = dual_quadrangle(nq);
    auto rep = congruent(d, nq, tol, true);

    auto s = edge_lengths(nq);
    auto sd = edge_lengths(d);
    std::vector<double> res{rep.max_vertex_distance};
    for (int k = 0; k < 4; ++k) res.push_back(std::abs(sd[k] - s[(k + 1) % 4]));
    return make_report("parallelogram_self_dual", std::move(res), tol.eps * 2.0);
}

TheoremReport verify_complement_identities(const MarkedQuadrangle& q, Tolerance tol) {
    MarkedQuadrangle nq = normalize(q);
    SqrtLift lift = sqrt_lift(edge_vectors(nq));
    PlaneBasis raw = quaternion_complement_raw(lift);
    auto s = edge_lengths(nq);
    double diag = diagonal_lengths(nq)[0];

    double g1 = raw.first[0], g2 = raw.first[1], h2 = raw.second[1];
    double r1 = std::abs(g2 * g2 + h2 * h2 - (1.0 - s[0]) * (1.0 - s[1]));
    Complex w2 = Complex(g2, h2);
    double r2 = std::abs(std::abs(g1 * g1 + w2 * w2) - (1.0 - s[0]) * diag);
    return make_report("complement_identities", {r1, r2}, tol.eps);
}

std::vector<TheoremReport> verify_all(const MarkedQuadrangle& q, Tolerance tol) {
    std::vector<TheoremReport> out;
    out.push_back(verify_edge_sums(q, tol));
    out.push_back(verify_diagonals(q, tol));
    out.push_back(verify_class_preservation(q, tol));
    out.push_back(verify_marking_invariance(q, tol));
    out.push_back(verify_involution(q, tol));
    bool simple = classify(q) != ShapeClass::SelfIntersecting;
    if (classify(q) == ShapeClass::Convex)
        out.push_back(verify_complement_identities(q, tol));
    if (simple && is_trapezoid(q)) out.push_back(verify_trapezoid(q, tol));
    if (simple && is_parallelogram(q)) out.push_back(verify_parallelogram(q, tol));
    return out;
}

} // namespace dualquad
