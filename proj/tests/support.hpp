#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "bary/document.hpp"
#include "bary/error.hpp"
#include "bary/forward.hpp"
#include "bary/generators.hpp"
#include "bary/graph.hpp"
#include "bary/recognizer.hpp"
#include "bary/rng.hpp"

namespace bary::testing {

struct Instance {
    PlanarGraph graph;
    std::vector<VertexId> outer;
    WeightFunction weights;
    EmbeddedDrawing drawing;
};

inline std::vector<EdgeKey> to_edges(std::initializer_list<std::pair<int, int>> list) {
    std::vector<EdgeKey> out;
    for (auto [a, b] : list) out.push_back({a, b});
    return out;
}

/// Random weights, log-uniform in [0.1, 10], on every edge with an endpoint off `outer`.
inline WeightFunction random_internal_weights(const PlanarGraph& g, const std::vector<VertexId>& outer, Rng& rng) {
    std::vector<bool> on(g.n, false);
    for (VertexId v : outer) on[v] = true;
    WeightFunction w;
    for (const EdgeKey& e : g.edges()) {
        if (on[e.from] && on[e.to]) continue;
        w.set(e.from, e.to, rng.log_uniform(0.1, 10.0));
    }
    return w;
}

inline Instance forward_instance(const PlanarGraph& g, const std::vector<VertexId>& outer, Rng& rng) {
    WeightFunction w = random_internal_weights(g, outer, rng);
    EmbeddedDrawing d = solve_barycenter(g, w, regular_outer_polygon(outer));
    return Instance{g, outer, std::move(w), std::move(d)};
}

inline Instance forward_instance(const DrawingDocument& doc, Rng& rng) {
    return forward_instance(graph_of(doc), *doc.outer_face, rng);
}

/// K4: outer triangle 0,1,2 and hub 3.
inline EmbeddedDrawing k4(Point hub, std::array<Point, 3> tri = {Point{0, 0}, Point{4, 0}, Point{2, 4}}) {
    const auto e = to_edges({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    return EmbeddedDrawing::from_positions(PlanarGraph::from_edges(4, e), {tri[0], tri[1], tri[2], hub});
}

/// Octahedron with outer triangle 0,1,2 and inner triangle 3,4,5; inner
/// vertex 3+k sees outer k and k+1, so every internal vertex has degree 4.
inline PlanarGraph octahedron() {
    return PlanarGraph::from_edges(
        6, to_edges({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}}));
}

/// Planar dual of a stacked triangulation: triconnected and cubic. The
/// outer face of the dual is the ring of triangles around primal vertex 3
/// (the first inserted one, always internal).
inline std::pair<PlanarGraph, std::vector<VertexId>> cubic_dual(int primal_n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::Stacked;
    spec.n = primal_n;
    spec.seed = seed;
    spec.forward = false;
    const DrawingDocument doc = generate(spec);
    const EmbeddedDrawing p = drawing_of(doc);
    std::vector<Face> faces = p.faces();
    faces.push_back(p.outer_face());
    std::map<EdgeKey, std::vector<VertexId>> sides;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const Face& c = faces[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            sides[EdgeKey{c[i], c[(i + 1) % c.size()]}.canonical()].push_back(static_cast<VertexId>(f));
        }
    }
    std::vector<EdgeKey> dual_edges;
    for (const auto& [e, fs] : sides) dual_edges.push_back({fs.at(0), fs.at(1)});
    const PlanarGraph g = PlanarGraph::from_edges(static_cast<int>(faces.size()), dual_edges);

    const VertexId hub = 3;
    const Point c = p.position(hub);
    std::vector<std::pair<double, VertexId>> ring;
    for (std::size_t f = 0; f + 1 < faces.size(); ++f) {
        if (std::find(faces[f].begin(), faces[f].end(), hub) == faces[f].end()) continue;
        Point m{};
        for (VertexId v : faces[f]) m = m + p.position(v);
        m = (1.0 / static_cast<double>(faces[f].size())) * m;
        ring.push_back({std::atan2(m.y - c.y, m.x - c.x), static_cast<VertexId>(f)});
    }
    std::sort(ring.begin(), ring.end());
    std::vector<VertexId> outer;
    for (auto [a, f] : ring) outer.push_back(f);
    return {g, outer};
}

/// Moves one internal vertex by `frac` of the bounding-box diagonal in a
/// random direction, retrying until the drawing still validates.
inline std::optional<EmbeddedDrawing> perturbed(const EmbeddedDrawing& d, Rng& rng, double frac = 0.05,
                                                int attempts = 200) {
    const std::vector<VertexId> internal = d.internal_vertices();
    if (internal.empty()) return std::nullopt;
    const double step = frac * d.bbox_diagonal();
    for (int a = 0; a < attempts; ++a) {
        const VertexId v = internal[rng.below(internal.size())];
        const double ang = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        std::vector<Point> pos(d.positions().begin(), d.positions().end());
        pos[v] = pos[v] + Point{step * std::cos(ang), step * std::sin(ang)};
        try {
            EmbeddedDrawing q = EmbeddedDrawing::from_positions(d.graph(), pos, d.outer_face());
            if (!validate_drawing(q)) return q;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

/// Every internal vertex jittered independently by up to `frac` of the
/// bbox; keeps the first draw that still validates.
inline std::optional<EmbeddedDrawing> jittered(const EmbeddedDrawing& d, Rng& rng, double frac, int attempts = 200) {
    const double step = frac * d.bbox_diagonal();
    for (int a = 0; a < attempts; ++a) {
        std::vector<Point> pos(d.positions().begin(), d.positions().end());
        for (VertexId v : d.internal_vertices()) {
            pos[v] = pos[v] + Point{rng.uniform(-step, step), rng.uniform(-step, step)};
        }
        try {
            EmbeddedDrawing q = EmbeddedDrawing::from_positions(d.graph(), pos, d.outer_face());
            if (!validate_drawing(q)) return q;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

/// Moves internal vertices one at a time by up to `frac` of their shortest
/// incident edge, keeping each move only if the drawing still validates.
/// The result is a valid drawing unrelated to any particular weights.
inline EmbeddedDrawing nudged_each(const EmbeddedDrawing& d, Rng& rng, double frac) {
    std::vector<Point> pos(d.positions().begin(), d.positions().end());
    EmbeddedDrawing cur = d;
    for (VertexId v : d.internal_vertices()) {
        double shortest = INFINITY;
        for (VertexId u : d.graph().adjacency[v]) shortest = std::min(shortest, norm(pos[u] - pos[v]));
        for (double step = frac * shortest; step > 1e-6 * shortest; step *= 0.5) {
            std::vector<Point> trial = pos;
            trial[v] = trial[v] + Point{rng.uniform(-step, step), rng.uniform(-step, step)};
            try {
                EmbeddedDrawing q = EmbeddedDrawing::from_positions(d.graph(), trial, d.outer_face());
                if (validate_drawing(q)) continue;
                pos = std::move(trial);
                cur = std::move(q);
                break;
            } catch (const Error&) {
            }
        }
    }
    return cur;
}

/// max_v |a_v - b_v| / bbox(a).
inline double position_gap(const EmbeddedDrawing& a, const EmbeddedDrawing& b) {
    double gap = 0.0;
    for (VertexId v = 0; v < a.vertex_count(); ++v) gap = std::max(gap, norm(a.position(v) - b.position(v)));
    return gap / a.bbox_diagonal();
}

/// Redraws `d` with weights `w` on its own outer polygon.
inline EmbeddedDrawing redraw(const EmbeddedDrawing& d, const WeightFunction& w) {
    OuterPolygon outer;
    for (VertexId v : d.outer_face()) outer.corners.push_back({v, d.position(v)});
    return solve_barycenter(d.graph(), w, outer);
}

// ---- independent reference computations --------------------------------

/// Barycentric coordinates by signed sub-triangle areas.
inline std::array<double, 3> ref_barycentric(Point p, Point a, Point b, Point c) {
    const auto area = [](Point u, Point v, Point w) { return cross(v - u, w - u); };
    const double t = area(a, b, c);
    return {area(p, b, c) / t, area(a, p, c) / t, area(a, b, p) / t};
}

/// Worst |sum ln(z_ji / z_ij)| over strictly internal faces of a cubic
/// drawing, z from ref_barycentric.
inline double ref_cubic_face_residual(const EmbeddedDrawing& d) {
    const auto z = [&](VertexId i, VertexId j) {
        const auto& nb = d.graph().adjacency[i];
        const auto c = ref_barycentric(d.position(i), d.position(nb[0]), d.position(nb[1]), d.position(nb[2]));
        for (int k = 0; k < 3; ++k) {
            if (nb[k] == j) return c[k];
        }
        return std::nan("");
    };
    double worst = 0.0;
    for (std::size_t f : d.strictly_internal_faces()) {
        const Face& c = d.faces()[f];
        double s = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const VertexId i = c[k], j = c[(k + 1) % c.size()];
            s += std::log(z(j, i) / z(i, j));
        }
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

}  // namespace bary::testing
