#include "bary/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "bary/error.hpp"
#include "bary/geometry.hpp"

namespace bary {

PlanarGraph PlanarGraph::from_edges(int n, std::span<const EdgeKey> edges) {
    if (n < 0) throw Error(Errc::InvalidInput, "negative vertex count");
    PlanarGraph g;
    g.n = n;
    g.adjacency.assign(n, {});
    std::set<EdgeKey> seen;
    for (const EdgeKey& e : edges) {
        if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n) {
            throw Error(Errc::InvalidInput, "edge references unknown vertex");
        }
        if (e.from == e.to) throw Error(Errc::InvalidInput, "self-loop at vertex " + std::to_string(e.from));
        if (!seen.insert(e.canonical()).second) {
            throw Error(Errc::InvalidInput, "parallel edge " + std::to_string(e.from) + "-" +
                                                std::to_string(e.to));
        }
        g.adjacency[e.from].push_back(e.to);
        g.adjacency[e.to].push_back(e.from);
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

bool PlanarGraph::adjacent(VertexId a, VertexId b) const {
    return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

std::size_t PlanarGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& adj : adjacency) deg += adj.size();
    return deg / 2;
}

std::vector<EdgeKey> PlanarGraph::edges() const {
    std::vector<EdgeKey> out;
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : adjacency[v]) {
            if (v < u) out.push_back({v, u});
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> rotation_from_positions(
    const std::vector<std::vector<VertexId>>& adjacency, std::span<const Point> positions,
    double eps_angle) {
    std::vector<std::vector<VertexId>> rot(adjacency.size());
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
        std::vector<std::pair<double, VertexId>> by_angle;
        for (VertexId u : adjacency[v]) {
            const Point d = positions[u] - positions[v];
            if (d.x == 0.0 && d.y == 0.0) {
                throw Error(Errc::DegenerateAngles, "vertices " + std::to_string(v) + " and " +
                                                        std::to_string(u) + " coincide");
            }
            double a = std::atan2(d.y, d.x);
            if (a < 0) a += 2.0 * std::numbers::pi;
            by_angle.emplace_back(a, u);
        }
        std::sort(by_angle.begin(), by_angle.end());
        const std::size_t k = by_angle.size();
        for (std::size_t i = 0; k > 1 && i < k; ++i) {
            double gap = by_angle[(i + 1) % k].first - by_angle[i].first;
            if (i + 1 == k) gap += 2.0 * std::numbers::pi;
            if (gap < eps_angle) {
                throw Error(Errc::DegenerateAngles,
                            "two neighbours of vertex " + std::to_string(v) + " share a direction");
            }
        }
        for (const auto& [a, u] : by_angle) rot[v].push_back(u);
    }
    return rot;
}

std::vector<Face> extract_faces(const PlanarGraph& g) {
    if (!g.has_rotation()) throw Error(Errc::InvalidInput, "graph has no rotation system");
    // position of each neighbour in the rotation, for O(1) predecessor lookup
    std::vector<std::map<VertexId, std::size_t>> slot(g.n);
    for (VertexId v = 0; v < g.n; ++v) {
        if (g.rotation[v].size() != g.adjacency[v].size()) {
            throw Error(Errc::InvalidInput, "rotation is not a permutation of the neighbourhood");
        }
        for (std::size_t i = 0; i < g.rotation[v].size(); ++i) slot[v][g.rotation[v][i]] = i;
    }
    std::set<EdgeKey> used;
    std::vector<Face> faces;
    for (VertexId s = 0; s < g.n; ++s) {
        for (VertexId t : g.rotation[s]) {
            if (used.count({s, t})) continue;
            Face face;
            VertexId u = s, v = t;
            while (used.insert({u, v}).second) {
                face.push_back(u);
                const auto& rv = g.rotation[v];
                const std::size_t k = rv.size();
                const VertexId w = rv[(slot[v].at(u) + k - 1) % k];
                u = v;
                v = w;
            }
            if (u != s || v != t) throw Error(Errc::EulerViolation, "face walk did not close");
            faces.push_back(std::move(face));
        }
    }
    const long long n = g.n;
    const long long m = static_cast<long long>(g.edge_count());
    const long long f = static_cast<long long>(faces.size());
    if (n - m + f != 2) {
        throw Error(Errc::EulerViolation, "n - m + f = " + std::to_string(n - m + f) + ", expected 2");
    }
    return faces;
}

bool same_cycle(std::span<const VertexId> a, std::span<const VertexId> b) {
    const std::size_t k = a.size();
    if (k != b.size()) return false;
    if (k == 0) return true;
    for (std::size_t shift = 0; shift < k; ++shift) {
        if (b[shift] != a[0]) continue;
        bool fwd = true, bwd = true;
        for (std::size_t i = 0; i < k; ++i) {
            fwd = fwd && a[i] == b[(shift + i) % k];
            bwd = bwd && a[i] == b[(shift + k - i) % k];
        }
        if (fwd || bwd) return true;
    }
    return false;
}

bool same_rotation(std::span<const VertexId> a, std::span<const VertexId> b) {
    const std::size_t k = a.size();
    if (k != b.size()) return false;
    if (k == 0) return true;
    for (std::size_t shift = 0; shift < k; ++shift) {
        if (b[shift] != a[0]) continue;
        bool fwd = true;
        for (std::size_t i = 0; i < k && fwd; ++i) fwd = a[i] == b[(shift + i) % k];
        if (fwd) return true;
    }
    return false;
}

namespace {

void orient_ccw(Face& f, std::span<const Point> pos) {
    std::vector<Point> pts;
    for (VertexId v : f) pts.push_back(pos[v]);
    if (signed_area2(pts) < 0) std::reverse(f.begin(), f.end());
}

}  // namespace

EmbeddedDrawing EmbeddedDrawing::from_positions(PlanarGraph g, std::vector<Point> positions,
                                                std::optional<std::vector<VertexId>> outer,
                                                const Tolerances& tol) {
    if (static_cast<int>(positions.size()) != g.n) {
        throw Error(Errc::InvalidInput, "position count does not match vertex count");
    }
    for (const Point& p : positions) {
        if (!p.finite()) throw Error(Errc::InvalidInput, "non-finite coordinate");
    }
    auto derived = rotation_from_positions(g.adjacency, positions, tol.eps_angle);
    if (g.has_rotation()) {
        for (int v = 0; v < g.n; ++v) {
            if (!same_rotation(g.rotation[v], derived[v])) {
                throw Error(Errc::InvalidInput,
                            "supplied rotation disagrees with the drawing at vertex " + std::to_string(v));
            }
        }
    }
    g.rotation = std::move(derived);

    std::vector<Face> all = extract_faces(g);
    std::vector<VertexId> target;
    if (outer) {
        target = *outer;
    } else {
        for (std::size_t i : convex_hull(positions, tol.eps_geom)) target.push_back(static_cast<VertexId>(i));
    }
    auto it = std::find_if(all.begin(), all.end(), [&](const Face& f) { return same_cycle(f, target); });
    if (it == all.end()) {
        throw Error(Errc::InvalidInput, outer ? "outer_face is not a face of the drawing"
                                              : "convex hull cycle is not a face of the drawing");
    }

    EmbeddedDrawing d;
    d.outer_ = *it;
    all.erase(it);
    d.faces_ = std::move(all);
    d.graph_ = std::move(g);
    d.positions_ = std::move(positions);
    orient_ccw(d.outer_, d.positions_);
    bary::classify(d);
    return d;
}

EmbeddedDrawing EmbeddedDrawing::from_embedding(PlanarGraph g, std::vector<Point> positions,
                                                std::span<const VertexId> outer) {
    if (static_cast<int>(positions.size()) != g.n) {
        throw Error(Errc::InvalidInput, "position count does not match vertex count");
    }
    std::vector<Face> all = extract_faces(g);
    auto it = std::find_if(all.begin(), all.end(), [&](const Face& f) { return same_cycle(f, outer); });
    if (it == all.end()) throw Error(Errc::InvalidInput, "outer polygon is not a face of the embedding");

    EmbeddedDrawing d;
    d.outer_ = *it;
    all.erase(it);
    d.faces_ = std::move(all);
    d.graph_ = std::move(g);
    d.positions_ = std::move(positions);
    orient_ccw(d.outer_, d.positions_);
    bary::classify(d);
    return d;
}

void classify(EmbeddedDrawing& d) {
    const int n = d.graph_.n;
    d.vertex_class_.assign(n, VertexClass::Internal);
    for (VertexId v : d.outer_) d.vertex_class_[v] = VertexClass::External;
    d.edge_class_.clear();
    for (const EdgeKey& e : d.graph_.edges()) {
        const int internal = d.is_internal(e.from) + d.is_internal(e.to);
        d.edge_class_[e] = internal == 2   ? EdgeClass::StrictlyInternal
                           : internal == 1 ? EdgeClass::Internal
                                           : EdgeClass::External;
    }
}

EdgeClass EmbeddedDrawing::edge_class(VertexId a, VertexId b) const {
    auto it = edge_class_.find(EdgeKey{a, b}.canonical());
    if (it == edge_class_.end()) throw Error(Errc::InvalidInput, "no such edge");
    return it->second;
}

std::vector<VertexId> EmbeddedDrawing::internal_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < graph_.n; ++v) {
        if (is_internal(v)) out.push_back(v);
    }
    return out;
}

std::vector<EdgeKey> EmbeddedDrawing::internal_edges() const {
    std::vector<EdgeKey> out;
    for (const auto& [e, c] : edge_class_) {
        if (c != EdgeClass::External) out.push_back(e);
    }
    return out;
}

std::vector<EdgeKey> EmbeddedDrawing::strictly_internal_edges() const {
    std::vector<EdgeKey> out;
    for (const auto& [e, c] : edge_class_) {
        if (c == EdgeClass::StrictlyInternal) out.push_back(e);
    }
    return out;
}

std::vector<std::size_t> EmbeddedDrawing::strictly_internal_faces() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (std::all_of(faces_[i].begin(), faces_[i].end(), [&](VertexId v) { return is_internal(v); })) {
            out.push_back(i);
        }
    }
    return out;
}

double EmbeddedDrawing::bbox_diagonal() const { return bary::bbox_diagonal(positions_); }

InternalForest internal_subgraph_forest(const EmbeddedDrawing& d) {
    const int n = d.vertex_count();
    InternalForest f;
    f.parent.assign(n, -1);
    f.component.assign(n, -1);
    std::set<EdgeKey> tree;

    for (VertexId r = 0; r < n; ++r) {
        if (!d.is_internal(r) || f.component[r] != -1) continue;
        const int comp = static_cast<int>(f.roots.size());
        f.roots.push_back(r);
        // Iterative DFS; each frame remembers how far through the
        // neighbour list it has got.
        std::vector<std::pair<VertexId, std::size_t>> stack{{r, 0}};
        f.component[r] = comp;
        f.order.push_back(r);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& adj = d.graph().adjacency[v];
            if (next == adj.size()) {
                stack.pop_back();
                continue;
            }
            const VertexId u = adj[next++];
            if (!d.is_internal(u) || f.component[u] != -1) continue;
            f.component[u] = comp;
            f.parent[u] = v;
            f.order.push_back(u);
            f.tree_edges.push_back({v, u});
            tree.insert(EdgeKey{v, u}.canonical());
            stack.emplace_back(u, 0);
        }
    }
    for (const EdgeKey& e : d.strictly_internal_edges()) {
        if (!tree.count(e)) f.back_edges.push_back(e);
    }
    return f;
}

}  // namespace bary
