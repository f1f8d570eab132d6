#include "dualquad/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace dualquad {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

struct Box {
    double min_x, min_y, max_x, max_y;
};

Box bounds(const std::array<Point2, 4>& v) {
    Box b{v[0].x, v[0].y, v[0].x, v[0].y};
    for (const Point2& p : v) {
        b.min_x = std::min(b.min_x, p.x);
        b.min_y = std::min(b.min_y, p.y);
        b.max_x = std::max(b.max_x, p.x);
        b.max_y = std::max(b.max_y, p.y);
    }
    return b;
}

} // namespace

std::string render_svg(const MarkedQuadrangle& q, const MarkedQuadrangle& dual,
                       const RenderSpec& spec) {
    if (spec.width < 64 || spec.height < 64)
        throw std::invalid_argument("render_svg: width and height must be at least 64");
    if (!(spec.stroke_scale > 0.0))
        throw std::invalid_argument("render_svg: stroke_scale must be positive");

    auto left = q.vertices();
    auto right = dual.vertices();
    Box lb = bounds(left), rb = bounds(right);

    // Put the dual to the right of the input, vertically centered with it.
    double gap = 0.25 * std::max({lb.max_x - lb.min_x, rb.max_x - rb.min_x, 0.5});
    double dx = lb.max_x + gap - rb.min_x;
    double dy = (lb.min_y + lb.max_y) / 2.0 - (rb.min_y + rb.max_y) / 2.0;
    for (Point2& p : right) p = p + Point2{dx, dy};

    std::array<Point2, 8> all;
    std::copy(left.begin(), left.end(), all.begin());
    std::copy(right.begin(), right.end(), all.begin() + 4);
    double min_x = all[0].x, min_y = all[0].y, max_x = all[0].x, max_y = all[0].y;
    for (const Point2& p : all) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    double world_w = std::max(max_x - min_x, 1e-9);
    double world_h = std::max(max_y - min_y, 1e-9);

    // 90% usable area leaves the required 5% margin on every side.
    double scale = std::min(0.9 * spec.width / world_w, 0.9 * spec.height / world_h);
    double pad_x = (spec.width - scale * world_w) / 2.0;
    double pad_y = (spec.height - scale * world_h) / 2.0;
    auto map = [&](Point2 p) -> Point2 {
        return {pad_x + scale * (p.x - min_x), spec.height - pad_y - scale * (p.y - min_y)};
    };

    double stroke = 1.5 * spec.stroke_scale;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";

    auto polygon = [&](const std::array<Point2, 4>& vs, const char* color) {
        out += "  <polygon fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"" + fmt(stroke) + "\" points=\"";
        for (int i = 0; i < 4; ++i) {
            Point2 m = map(vs[i]);
            if (i) out += " ";
            out += fmt(m.x) + "," + fmt(m.y);
        }
        out += "\"/>\n";
    };
    auto diagonal = [&](Point2 a, Point2 b, const char* color) {
        Point2 ma = map(a), mb = map(b);
        out += "  <line stroke=\"" + std::string(color) + "\" stroke-width=\"" +
               fmt(0.75 * spec.stroke_scale) + "\" stroke-dasharray=\"4 3\" x1=\"" +
               fmt(ma.x) + "\" y1=\"" + fmt(ma.y) + "\" x2=\"" + fmt(mb.x) +
               "\" y2=\"" + fmt(mb.y) + "\"/>\n";
    };
    auto labels = [&](const std::array<Point2, 4>& vs, const char* names) {
        for (int i = 0; i < 4; ++i) {
            Point2 m = map(vs[i]);
            out += "  <text font-size=\"" + fmt(12.0 * spec.stroke_scale) + "\" x=\"" +
                   fmt(m.x + 4.0) + "\" y=\"" + fmt(m.y - 4.0) + "\">";
            out += names[i];
            out += "</text>\n";
        }
    };

    polygon(left, "#1f4e9c");
    polygon(right, "#b03030");
    if (spec.show_diagonals) {
        diagonal(left[0], left[2], "#1f4e9c");
        diagonal(left[1], left[3], "#1f4e9c");
        diagonal(right[0], right[2], "#b03030");
        diagonal(right[1], right[3], "#b03030");
    }
    if (spec.show_labels) {
        labels(left, "ABCD");
        labels(right, "KLMN");
    }
    out += "</svg>\n";
    return out;
}

} // namespace dualquad
