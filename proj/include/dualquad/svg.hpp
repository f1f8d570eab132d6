#pragma once

#include <string>

#include "dualquad/geometry.hpp"

namespace dualquad {

struct RenderSpec {
    int width = 800;    // pixels, >= 64
    int height = 420;   // pixels, >= 64
    bool show_labels = true;
    bool show_diagonals = false;
    double stroke_scale = 1.0;  // > 0
};

// One SVG with the quadrangle on the left and its dual on the right. The
// viewBox encloses every plotted vertex with at least a 5% margin; floats
// are printed with 9 significant digits, so output bytes are reproducible.
std::string render_svg(const MarkedQuadrangle& q, const MarkedQuadrangle& dual,
                       const RenderSpec& spec = {});

} // namespace dualquad
