#pragma once

#include <optional>
#include <string>

#include "dualquad/geometry.hpp"

namespace dualquad {

// Wire format for one quadrangle:
//   {"vertices": [[x,y],[x,y],[x,y],[x,y]], "label": "optional"}
// Vertices are listed in marked traversal order. No other keys are
// accepted.
struct QuadrangleDocument {
    std::array<Point2, 4> vertices;
    std::optional<std::string> label;
};

// Throws ParseError for malformed text or structure (with the position when
// the JSON itself is broken) and ValidationError when the vertices do not
// form a valid quadrangle.
QuadrangleDocument parse_document(const std::string& text);

// Compact JSON; parse_document(print_document(d)) is value-identical to d.
std::string print_document(const QuadrangleDocument& doc);

MarkedQuadrangle to_quadrangle(const QuadrangleDocument& doc);
QuadrangleDocument to_document(const MarkedQuadrangle& q,
                               std::optional<std::string> label = std::nullopt);

} // namespace dualquad
