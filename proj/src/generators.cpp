#include "bary/generators.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "bary/error.hpp"
#include "bary/forward.hpp"
#include "bary/rng.hpp"

namespace bary {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Prism: return "prism";
        case Family::Wheel: return "wheel";
        case Family::Halin: return "halin";
        case Family::Stacked: return "stacked";
        case Family::NestedRotated: return "nested_rotated";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    for (Family f : {Family::Prism, Family::Wheel, Family::Halin, Family::Stacked, Family::NestedRotated}) {
        if (to_string(f) == name) return f;
    }
    throw Error(Errc::BadParameters, "unknown family \"" + std::string(name) + "\"");
}

namespace {

Point polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

double corner_angle(int i, int k) { return std::numbers::pi / 2 + 2.0 * std::numbers::pi * i / k; }

DrawingDocument make_doc(const std::vector<Point>& pos, const std::vector<EdgeKey>& edges,
                         std::vector<VertexId> outer) {
    DrawingDocument doc;
    for (std::size_t v = 0; v < pos.size(); ++v) doc.vertices.push_back({static_cast<VertexId>(v), pos[v].x, pos[v].y});
    doc.edges = edges;
    doc.outer_face = std::move(outer);
    return doc;
}

DrawingDocument prism(int k, double r, double twist_deg) {
    if (k < 3) throw Error(Errc::BadParameters, "prism needs k >= 3");
    if (!(r > 0.0 && r < 1.0)) throw Error(Errc::BadParameters, "prism needs 0 < inner radius < 1");
    if (!(std::abs(twist_deg) < 180.0)) throw Error(Errc::BadParameters, "twist must lie in (-180, 180)");
    const double twist = twist_deg * std::numbers::pi / 180.0;
    std::vector<Point> pos(2 * k);
    std::vector<EdgeKey> edges;
    std::vector<VertexId> outer;
    for (int i = 0; i < k; ++i) {
        pos[i] = polar(1.0, corner_angle(i, k));
        pos[k + i] = polar(r, corner_angle(i, k) + twist);
        edges.push_back({i, (i + 1) % k});
        edges.push_back({k + i, k + (i + 1) % k});
        edges.push_back({i, k + i});
        outer.push_back(i);
    }
    return make_doc(pos, edges, outer);
}

DrawingDocument wheel(int k) {
    if (k < 3) throw Error(Errc::BadParameters, "wheel needs k >= 3");
    std::vector<Point> pos(k + 1);
    std::vector<EdgeKey> edges;
    std::vector<VertexId> outer;
    for (int i = 0; i < k; ++i) {
        pos[i] = polar(1.0, corner_angle(i, k));
        edges.push_back({i, (i + 1) % k});
        edges.push_back({i, k});
        outer.push_back(i);
    }
    pos[k] = {0.0, 0.0};
    return make_doc(pos, edges, outer);
}

WeightFunction random_weights(const PlanarGraph& g, const std::vector<VertexId>& outer, Rng& rng) {
    std::vector<bool> on_outer(g.n, false);
    for (VertexId v : outer) on_outer[v] = true;
    WeightFunction w;
    for (const EdgeKey& e : g.edges()) {
        if (on_outer[e.from] && on_outer[e.to]) continue;
        w.set(e.from, e.to, rng.log_uniform(0.1, 10.0));
    }
    return w;
}

DrawingDocument forward_drawn(int n, const std::vector<EdgeKey>& edges, const std::vector<VertexId>& outer,
                              Rng& rng) {
    const PlanarGraph g = PlanarGraph::from_edges(n, edges);
    const WeightFunction w = random_weights(g, outer, rng);
    const EmbeddedDrawing d = solve_barycenter(g, w, regular_outer_polygon(outer));
    DrawingDocument doc = document_of(d, &w);
    doc.edges = edges;
    doc.outer_face = outer;
    return doc;
}

DrawingDocument halin(int target, std::uint64_t seed) {
    if (target < 4) throw Error(Errc::BadParameters, "halin needs n >= 4");
    Rng rng(seed);
    // Tree grown by turning a random leaf into an internal vertex with two
    // or three children; no vertex ever has degree 2.
    std::vector<std::vector<VertexId>> children(1);
    std::vector<VertexId> leaves;
    for (int c = 0; c < 3; ++c) {
        children[0].push_back(static_cast<VertexId>(children.size()));
        leaves.push_back(static_cast<VertexId>(children.size()));
        children.emplace_back();
    }
    while (static_cast<int>(children.size()) + 2 <= target) {
        const std::size_t pick = rng.below(leaves.size());
        const VertexId leaf = leaves[pick];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
        const int extra = (static_cast<int>(children.size()) + 3 <= target && rng.uniform01() < 0.3) ? 3 : 2;
        for (int c = 0; c < extra; ++c) {
            const auto id = static_cast<VertexId>(children.size());
            children[leaf].push_back(id);
            leaves.push_back(id);
            children.emplace_back();
        }
    }
    const int n = static_cast<int>(children.size());
    std::vector<EdgeKey> edges;
    std::vector<VertexId> order;  // leaves in planar (DFS) order
    std::vector<VertexId> stack{0};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        if (children[v].empty()) order.push_back(v);
        for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) {
            edges.push_back({v, *it});
            stack.push_back(*it);
        }
    }
    for (std::size_t i = 0; i < order.size(); ++i) edges.push_back({order[i], order[(i + 1) % order.size()]});
    std::sort(edges.begin(), edges.end());
    return forward_drawn(n, edges, order, rng);
}

DrawingDocument stacked(int n, std::uint64_t seed, bool forward) {
    if (n < 3) throw Error(Errc::BadParameters, "stacked needs n >= 3");
    Rng rng(seed);
    std::vector<Point> pos;
    for (int i = 0; i < 3; ++i) pos.push_back(polar(1.0, corner_angle(i, 3)));
    std::vector<EdgeKey> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}};
    while (static_cast<int>(pos.size()) < n) {
        const std::size_t f = rng.below(faces.size());
        const auto [a, b, c] = faces[f];
        const auto v = static_cast<VertexId>(pos.size());
        pos.push_back((1.0 / 3.0) * (pos[a] + pos[b] + pos[c]));
        edges.push_back({a, v});
        edges.push_back({b, v});
        edges.push_back({c, v});
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    const std::vector<VertexId> outer{0, 1, 2};
    if (!forward) return make_doc(pos, edges, outer);
    return forward_drawn(n, edges, outer, rng);
}

}  // namespace

DrawingDocument generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::Prism: return prism(spec.k, spec.inner_radius, spec.twist_deg);
        case Family::Wheel: return wheel(spec.k);
        case Family::Halin: return halin(spec.n, spec.seed);
        case Family::Stacked: return stacked(spec.n, spec.seed, spec.forward);
        case Family::NestedRotated: return prism(3, spec.inner_radius, spec.twist_deg);
    }
    throw Error(Errc::BadParameters, "unknown family");
}

}  // namespace bary
