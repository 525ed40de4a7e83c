#include "bary/forward.hpp"

#include <algorithm>
#include <cmath>

#include "bary/error.hpp"
#include "bary/geometry.hpp"
#include "bary/linalg.hpp"

namespace bary {

void WeightFunction::set(VertexId a, VertexId b, double w) {
    if (!std::isfinite(w) || w <= 0.0) {
        throw Error(Errc::InvalidInput, "weight on " + std::to_string(a) + "-" + std::to_string(b) +
                                            " must be positive");
    }
    w_[EdgeKey{a, b}.canonical()] = w;
}

std::optional<double> WeightFunction::find(VertexId a, VertexId b) const {
    auto it = w_.find(EdgeKey{a, b}.canonical());
    if (it == w_.end()) return std::nullopt;
    return it->second;
}

double WeightFunction::at(VertexId a, VertexId b) const {
    if (auto w = find(a, b)) return *w;
    throw Error(Errc::InvalidInput, "no weight on edge " + std::to_string(a) + "-" + std::to_string(b));
}

double WeightFunction::max() const {
    double m = 0.0;
    for (const auto& [e, w] : w_) m = std::max(m, w);
    return m;
}

void WeightFunction::scale(double c) {
    if (!(c > 0.0)) throw Error(Errc::InvalidInput, "weight scale must be positive");
    for (auto& [e, w] : w_) w *= c;
}

std::vector<VertexId> OuterPolygon::ids() const {
    std::vector<VertexId> out;
    for (const auto& [v, p] : corners) out.push_back(v);
    return out;
}

OuterPolygon regular_outer_polygon(std::span<const VertexId> ids, double radius, double phase) {
    OuterPolygon poly;
    const double k = static_cast<double>(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const double a = phase + 2.0 * 3.14159265358979323846 * static_cast<double>(i) / k;
        poly.corners.emplace_back(ids[i], Point{radius * std::cos(a), radius * std::sin(a)});
    }
    return poly;
}

EmbeddedDrawing solve_barycenter(const PlanarGraph& g, const WeightFunction& weights,
                                 const OuterPolygon& outer, const Tolerances& tol) {
    std::vector<Point> corner_pts;
    std::vector<int> slot(g.n, -1);  // unknown index, -1 for outer vertices
    for (const auto& [v, p] : outer.corners) {
        if (v < 0 || v >= g.n) throw Error(Errc::InvalidInput, "outer polygon references unknown vertex");
        corner_pts.push_back(p);
    }
    const auto conv = is_convex_polygon(corner_pts, tol.eps_geom);
    if (!conv.convex || !conv.strict || !conv.ccw) {
        throw Error(Errc::InvalidInput, "outer polygon must be strictly convex and counter-clockwise");
    }

    std::vector<Point> pos(g.n);
    std::vector<bool> fixed(g.n, false);
    for (const auto& [v, p] : outer.corners) {
        if (fixed[v]) throw Error(Errc::InvalidInput, "outer polygon repeats a vertex");
        fixed[v] = true;
        pos[v] = p;
    }
    std::vector<VertexId> unknowns;
    for (VertexId v = 0; v < g.n; ++v) {
        if (!fixed[v]) {
            slot[v] = static_cast<int>(unknowns.size());
            unknowns.push_back(v);
        }
    }

    const std::size_t k = unknowns.size();
    if (k > 0) {
        Matrix a(k, k);
        Matrix rhs(k, 2);
        for (std::size_t r = 0; r < k; ++r) {
            const VertexId i = unknowns[r];
            if (g.adjacency[i].empty()) throw Error(Errc::SingularSystem, "isolated internal vertex");
            for (VertexId j : g.adjacency[i]) {
                const double w = weights.at(i, j);
                a(r, r) += w;
                if (fixed[j]) {
                    rhs(r, 0) += w * pos[j].x;
                    rhs(r, 1) += w * pos[j].y;
                } else {
                    a(r, static_cast<std::size_t>(slot[j])) -= w;
                }
            }
        }
        const Matrix xy = solve_dense(std::move(a), std::move(rhs));
        for (std::size_t r = 0; r < k; ++r) pos[unknowns[r]] = {xy(r, 0), xy(r, 1)};
    }

    const auto ids = outer.ids();
    if (g.has_rotation()) return EmbeddedDrawing::from_embedding(g, std::move(pos), ids);
    return EmbeddedDrawing::from_positions(g, std::move(pos), ids, tol);
}

double barycenter_residual(const EmbeddedDrawing& d, const WeightFunction& weights) {
    const double diag = d.bbox_diagonal();
    double worst = 0.0;
    for (VertexId i : d.internal_vertices()) {
        double total = 0.0;
        Point acc{};
        for (VertexId j : d.graph().adjacency[i]) {
            const double w = weights.at(i, j);
            total += w;
            acc = acc + w * d.position(j);
        }
        const Point gap = d.position(i) - (1.0 / total) * acc;
        worst = std::max(worst, norm(gap));
    }
    return diag > 0 ? worst / diag : worst;
}

TutteReport verify_tutte_output(const EmbeddedDrawing& d, const Tolerances& tol) {
    TutteReport rep;
    const auto edges = d.edges();
    rep.crossing_free = crossing_free(d.positions(), edges, tol.eps_geom);

    auto pts_of = [&](const Face& f) {
        std::vector<Point> pts;
        for (VertexId v : f) pts.push_back(d.position(v));
        return pts;
    };
    const auto outer = is_convex_polygon(pts_of(d.outer_face()), tol.eps_geom);
    rep.outer_convex = outer.convex && outer.strict;

    for (std::size_t i = 0; i < d.faces().size(); ++i) {
        const auto c = is_convex_polygon(pts_of(d.faces()[i]), tol.eps_geom);
        if (!c.convex || !c.ccw) rep.bad_faces.push_back(i);
    }
    rep.faces_convex = rep.bad_faces.empty();

    try {
        const auto rot = rotation_from_positions(d.graph().adjacency, d.positions(), tol.eps_angle);
        rep.embedding_preserved = true;
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (!same_rotation(rot[v], d.graph().rotation[v])) rep.embedding_preserved = false;
        }
    } catch (const Error&) {
        rep.embedding_preserved = false;
    }
    return rep;
}

}  // namespace bary
