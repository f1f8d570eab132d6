#pragma once

#include <cmath>

#include "dualquad/geometry.hpp"

namespace fixtures {

using dualquad::MarkedQuadrangle;

inline MarkedQuadrangle unit_square() {
    return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

// Canonical square, perimeter 2.
inline MarkedQuadrangle square_half() {
    return {{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}};
}

// Canonical rectangle, perimeter 2.
inline MarkedQuadrangle rect_46() {
    return {{0, 0}, {0.4, 0}, {0.4, 0.6}, {0, 0.6}};
}

inline MarkedQuadrangle dart() {
    return {{0, 0}, {1, 0}, {0.5, 0.2}, {0.5, 1}};
}

inline MarkedQuadrangle crossed_square() {
    return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
}

// Crossed quadrangle with all interior angles pi/3 and perimeter 2; its dual
// is the same shape rotated.
inline MarkedQuadrangle crossed_hourglass() {
    double third = 1.0 / 3.0;
    double rise = 1.0 / std::sqrt(3.0);
    return {{0, 0}, {third, 0}, {0, rise}, {third, rise}};
}

inline MarkedQuadrangle trapezoid_base() {
    return {{0, 0}, {0.7, 0}, {0.55, 0.3}, {0.2, 0.3}};
}

} // namespace fixtures
