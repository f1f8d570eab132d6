#include "dualquad/document.hpp"

#include <cmath>

#include <json.hpp>

namespace dualquad {

using nlohmann::json;

QuadrangleDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    if (!j.is_object()) throw ParseError("document must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "vertices" && item.key() != "label")
            throw ParseError("unexpected key \"" + item.key() + "\"");
    if (!j.contains("vertices")) throw ParseError("missing \"vertices\"");

    const json& verts = j["vertices"];
    if (!verts.is_array() || verts.size() != 4)
        throw ParseError("expected 4 vertices");

    QuadrangleDocument doc;
    for (int i = 0; i < 4; ++i) {
        const json& p = verts[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw ParseError("vertex must be a pair of numbers");
        doc.vertices[i] = {p[0].get<double>(), p[1].get<double>()};
        if (!std::isfinite(doc.vertices[i].x) || !std::isfinite(doc.vertices[i].y))
            throw ParseError("vertex coordinates must be finite");
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
        doc.label = j["label"].get<std::string>();
    }

    try {
        edge_vectors(to_quadrangle(doc));
    } catch (const DegenerateInput&) {
        throw ValidationError("degenerate: two successive edges are collinear");
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    return doc;
}

std::string print_document(const QuadrangleDocument& doc) {
    json verts = json::array();
    for (const Point2& p : doc.vertices) verts.push_back(json::array({p.x, p.y}));
    json j{{"vertices", verts}};
    if (doc.label) j["label"] = *doc.label;
    return j.dump();
}

MarkedQuadrangle to_quadrangle(const QuadrangleDocument& doc) {
    return MarkedQuadrangle(doc.vertices);
}

QuadrangleDocument to_document(const MarkedQuadrangle& q, std::optional<std::string> label) {
    return QuadrangleDocument{q.vertices(), std::move(label)};
}

} // namespace dualquad
