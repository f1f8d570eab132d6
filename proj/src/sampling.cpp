#include "dualquad/sampling.hpp"

#include <cmath>
#include <numbers>

#include "dualquad/theorems.hpp"

namespace dualquad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDraws = 200000;

double wrap_angle(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}

Point2 random_point(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double x = u(rng);
    double y = u(rng);
    return {x, y};
}

} // namespace

MarkedQuadrangle random_quadrangle(ShapeClass cls, Rng& rng, double min_margin) {
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        Point2 a = random_point(rng), b = random_point(rng);
        Point2 c = random_point(rng), d = random_point(rng);
        MarkedQuadrangle q(a, b, c, d);
        if (collinearity_margin(q) < min_margin) continue;
        if (classify(q) == cls) return q;
    }
    throw std::logic_error("random_quadrangle: rejection sampling did not terminate");
}

MarkedQuadrangle random_convex(Rng& rng, double min_margin) {
    return random_quadrangle(ShapeClass::Convex, rng, min_margin);
}

MarkedQuadrangle random_parallelogram(Rng& rng, double min_margin) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        Point2 a = random_point(rng);
        Point2 s{u(rng), u(rng)};
        Point2 t{u(rng), u(rng)};
        if (norm(s) < 0.2 || norm(t) < 0.2) continue;
        MarkedQuadrangle q(a, a + s, a + s + t, a + t);
        if (collinearity_margin(q) >= min_margin) return q;
    }
    throw std::logic_error("random_parallelogram: rejection sampling did not terminate");
}

MarkedQuadrangle random_trapezoid(Rng& rng, double min_margin) {
    std::uniform_real_distribution<double> len(0.4, 1.2);
    std::uniform_real_distribution<double> height(0.3, 1.0);
    std::uniform_real_distribution<double> slide(-0.4, 0.4);
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        double base = len(rng), top = len(rng);
        if (std::abs(base - top) < 0.15) continue;  // keep the other pair skew
        double h = height(rng), dx = slide(rng);
        MarkedQuadrangle q({0.0, 0.0}, {base, 0.0}, {dx + top, h}, {dx, h});
        if (collinearity_margin(q) < min_margin) continue;
        if (classify(q) == ShapeClass::SelfIntersecting) continue;
        if (is_parallelogram(q)) continue;
        auto pair = is_trapezoid(q);
        if (pair && *pair == 0) return q;
    }
    throw std::logic_error("random_trapezoid: rejection sampling did not terminate");
}

bool in_reference_pose(const MarkedQuadrangle& nq, ShapeClass cls, double angle_tol) {
    auto z = edge_vectors(nq).z;
    auto beta = interior_angles(nq).angle;

    std::array<double, 4> expected{0.0, kPi - beta[1], 0.0, 0.0};
    switch (cls) {
        case ShapeClass::Convex:
            expected[2] = 2.0 * kPi - beta[1] - beta[2];
            expected[3] = kPi + beta[0];
            break;
        case ShapeClass::NonConvexSimple:
            expected[2] = beta[2] - beta[1];
            expected[3] = kPi + beta[0];
            break;
        case ShapeClass::SelfIntersecting:
            expected[2] = beta[2] - beta[1];
            expected[3] = beta[0] - kPi;
            break;
    }
    for (int k = 0; k < 4; ++k)
        if (std::abs(wrap_angle(std::arg(z[k]) - expected[k])) > angle_tol) return false;
    return true;
}

MarkedQuadrangle random_in_reference_pose(ShapeClass cls, Rng& rng, double min_margin) {
    for (int draw = 0; draw < 1000; ++draw) {
        MarkedQuadrangle q = random_quadrangle(cls, rng, min_margin);
        for (int shift = 0; shift < 4; ++shift) {
            for (int rev = 0; rev < 2; ++rev) {
                MarkedQuadrangle m = normalize(q.remarked(shift, rev != 0));
                if (in_reference_pose(m, cls)) return m;
            }
        }
    }
    throw std::logic_error("random_in_reference_pose: no marking matched the pose");
}

} // namespace dualquad
