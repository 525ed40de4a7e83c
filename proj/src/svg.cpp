#include "bary/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "bary/geometry.hpp"

namespace bary {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 20.0;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace

std::string render_svg(const DrawingDocument& doc, const RecognitionResult* result) {
    const auto pos = positions_of(doc);
    double lx = 0, hx = 1, ly = 0, hy = 1;
    if (!pos.empty()) {
        lx = hx = pos[0].x;
        ly = hy = pos[0].y;
        for (const Point& p : pos) {
            lx = std::min(lx, p.x);
            hx = std::max(hx, p.x);
            ly = std::min(ly, p.y);
            hy = std::max(hy, p.y);
        }
    }
    const double span = std::max({hx - lx, hy - ly, 1e-300});
    const double s = kCanvas / span;
    auto px = [&](const Point& p) { return fmt("%.3f", kMargin + (p.x - lx) * s); };
    auto py = [&](const Point& p) { return fmt("%.3f", kMargin + (hy - p.y) * s); };
    auto points_attr = [&](const std::vector<VertexId>& cycle) {
        std::string out;
        for (VertexId v : cycle) {
            if (!out.empty()) out += ' ';
            out += px(pos[v]) + "," + py(pos[v]);
        }
        return out;
    };

    const double size = kCanvas + 2 * kMargin;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt("%.0f", size)
        << "\" height=\"" << fmt("%.0f", size) << "\" viewBox=\"0 0 " << fmt("%.0f", size) << " "
        << fmt("%.0f", size) << "\">\n";

    std::vector<VertexId> outer;
    if (doc.outer_face) {
        outer = *doc.outer_face;
    } else {
        for (std::size_t i : convex_hull(pos)) outer.push_back(static_cast<VertexId>(i));
    }
    svg << "  <polygon class=\"outer-face\" points=\"" << points_attr(outer)
        << "\" fill=\"#eef3fb\" stroke=\"#1f4e9a\" stroke-width=\"2\"/>\n";

    if (result && result->verdict == Verdict::Rejected && result->certificate) {
        svg << "  <polygon class=\"certificate\" points=\"" << points_attr(result->certificate->vertices)
            << "\" fill=\"#f4a6a6\" stroke=\"none\"/>\n";
    }

    for (const EdgeKey& e : doc.edges) {
        svg << "  <line x1=\"" << px(pos[e.from]) << "\" y1=\"" << py(pos[e.from]) << "\" x2=\"" << px(pos[e.to])
            << "\" y2=\"" << py(pos[e.to]) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    }
    if (result && result->verdict == Verdict::Accepted) {
        for (const auto& [e, w] : result->weights.entries()) {
            const Point mid = 0.5 * (pos[e.from] + pos[e.to]);
            svg << "  <text x=\"" << px(mid) << "\" y=\"" << py(mid)
                << "\" font-size=\"10\" fill=\"#7a1f1f\" text-anchor=\"middle\">" << fmt("%.3g", w) << "</text>\n";
        }
    }
    for (const auto& v : doc.vertices) {
        const Point p{v.x, v.y};
        svg << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"4\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace bary
