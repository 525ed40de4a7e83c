#include "bary/energy.hpp"

#include <algorithm>
#include <cmath>

#include "bary/error.hpp"

namespace bary {

double total_energy(const EmbeddedDrawing& d, std::span<const Point> positions, const WeightFunction& w) {
    double total = 0.0;
    for (const EdgeKey& e : d.internal_edges()) {
        const Point diff = positions[e.from] - positions[e.to];
        total += 0.5 * w.at(e.from, e.to) * dot(diff, diff);
    }
    return total;
}

EnergyReport energy(const EmbeddedDrawing& d, const WeightFunction& w) {
    EnergyReport rep;
    for (const EdgeKey& e : d.internal_edges()) {
        const Point diff = d.position(e.from) - d.position(e.to);
        const double eta = 0.5 * w.at(e.from, e.to) * dot(diff, diff);
        rep.per_edge[e] = eta;
        rep.total += eta;
    }
    for (VertexId i : d.internal_vertices()) {
        Point g{};
        for (VertexId j : d.graph().adjacency[i]) g = g + w.at(i, j) * (d.position(i) - d.position(j));
        rep.gradient.emplace_back(i, g);
        rep.gradient_norm_max = std::max(rep.gradient_norm_max, norm(g));
    }
    return rep;
}

double gradient_check(const EmbeddedDrawing& d, const WeightFunction& w, double h) {
    const EnergyReport rep = energy(d, w);
    std::vector<Point> pos(d.positions().begin(), d.positions().end());
    double worst = 0.0, gmax = 0.0;
    for (const auto& [i, g] : rep.gradient) {
        gmax = std::max({gmax, std::abs(g.x), std::abs(g.y)});
        const Point saved = pos[i];
        double numeric[2];
        for (int axis = 0; axis < 2; ++axis) {
            const Point step = axis == 0 ? Point{h, 0.0} : Point{0.0, h};
            pos[i] = saved + step;
            const double up = total_energy(d, pos, w);
            pos[i] = saved - step;
            const double down = total_energy(d, pos, w);
            numeric[axis] = (up - down) / (2.0 * h);
        }
        pos[i] = saved;
        worst = std::max({worst, std::abs(g.x - numeric[0]), std::abs(g.y - numeric[1])});
    }
    const double denom = std::max(gmax, w.max() * d.bbox_diagonal());
    return denom > 0 ? worst / denom : worst;
}

bool is_nested_prism(const EmbeddedDrawing& d) {
    const auto inner = d.internal_vertices();
    const std::size_t k = d.outer_face().size();
    if (inner.size() != k || static_cast<std::size_t>(d.vertex_count()) != 2 * k) return false;
    for (VertexId v : inner) {
        if (d.graph().degree(v) != 3) return false;
        int outside = 0;
        for (VertexId u : d.graph().adjacency[v]) outside += !d.is_internal(u);
        if (outside != 1) return false;
    }
    // k strictly internal edges with every inner vertex of inner degree 2
    // and connected: a single cycle.
    const InternalForest forest = internal_subgraph_forest(d);
    return forest.component_count() == 1 && d.strictly_internal_edges().size() == k;
}

RotationProbe rotation_perturbation_probe(const EmbeddedDrawing& d, const WeightFunction& w, double eps) {
    if (!is_nested_prism(d)) throw Error(Errc::WrongFamily, "drawing is not a nested polygon prism");
    const auto inner = d.internal_vertices();
    Point c{};
    for (VertexId v : inner) c = c + d.position(v);
    c = (1.0 / static_cast<double>(inner.size())) * c;

    const double base = total_energy(d, d.positions(), w);
    auto rotated = [&](double angle) {
        std::vector<Point> pos(d.positions().begin(), d.positions().end());
        const double cs = std::cos(angle), sn = std::sin(angle);
        for (VertexId v : inner) {
            const Point r = pos[v] - c;
            pos[v] = c + Point{cs * r.x - sn * r.y, sn * r.x + cs * r.y};
        }
        return total_energy(d, pos, w) - base;
    };
    return {rotated(eps), rotated(-eps)};
}

}  // namespace bary
