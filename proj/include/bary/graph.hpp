#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bary/types.hpp"

namespace bary {

/// Undirected simple graph, optionally with a rotation system (cyclic
/// counter-clockwise neighbour order per vertex).
struct PlanarGraph {
    int n = 0;
    std::vector<std::vector<VertexId>> adjacency;  // sorted ascending
    std::vector<std::vector<VertexId>> rotation;   // empty when not embedded

    /// Rejects out-of-range ids, self-loops and parallel edges.
    static PlanarGraph from_edges(int n, std::span<const EdgeKey> edges);

    bool has_rotation() const { return !rotation.empty(); }
    int degree(VertexId v) const { return static_cast<int>(adjacency[v].size()); }
    bool adjacent(VertexId a, VertexId b) const;
    std::size_t edge_count() const;
    /// Canonical (min, max) keys in ascending order.
    std::vector<EdgeKey> edges() const;
};

using Face = std::vector<VertexId>;

enum class VertexClass { External, Internal };
enum class EdgeClass { External, Internal, StrictlyInternal };

/// Counter-clockwise angular order of each neighbourhood, angles measured in
/// [0, 2pi). Throws DegenerateAngles when two neighbours of a vertex are
/// within eps_angle radians of each other as seen from it.
std::vector<std::vector<VertexId>> rotation_from_positions(
    const std::vector<std::vector<VertexId>>& adjacency, std::span<const Point> positions,
    double eps_angle = 1e-9);

/// Face walk on the rotation system: (u,v) is followed by (v,w) where w
/// precedes u in the rotation at v. Bounded faces come out counter-clockwise,
/// the outer face clockwise. Throws EulerViolation unless n - m + f = 2.
std::vector<Face> extract_faces(const PlanarGraph& g);

/// True if a and b are the same cyclic sequence in either direction.
bool same_cycle(std::span<const VertexId> a, std::span<const VertexId> b);
/// True if a and b are the same cyclic sequence in the same direction.
bool same_rotation(std::span<const VertexId> a, std::span<const VertexId> b);

/// Spanning forest of the internal vertices over strictly internal edges.
struct InternalForest {
    std::vector<VertexId> roots;
    std::vector<VertexId> parent;     // -1 for roots and external vertices
    std::vector<int> component;       // -1 for external vertices
    std::vector<VertexId> order;      // DFS preorder over all components
    std::vector<EdgeKey> tree_edges;  // (parent, child)
    std::vector<EdgeKey> back_edges;  // strictly internal edges not in the tree, canonical

    std::size_t component_count() const { return roots.size(); }
};

/// A straight-line drawing together with its combinatorial embedding.
/// `faces` holds the bounded faces only; the outer face is kept separately
/// as a counter-clockwise vertex cycle.
class EmbeddedDrawing {
public:
    /// Rotation derived from coordinates. If `g` already carries a rotation
    /// it must agree with the derived one. The outer face is `outer` when
    /// given, otherwise the convex hull cycle, which must be a face.
    static EmbeddedDrawing from_positions(PlanarGraph g, std::vector<Point> positions,
                                          std::optional<std::vector<VertexId>> outer = {},
                                          const Tolerances& tol = {});

    /// Combinatorial embedding taken from `g.rotation` as is; positions are
    /// not consulted except to orient the outer cycle.
    static EmbeddedDrawing from_embedding(PlanarGraph g, std::vector<Point> positions,
                                          std::span<const VertexId> outer);

    const PlanarGraph& graph() const { return graph_; }
    int vertex_count() const { return graph_.n; }
    std::span<const Point> positions() const { return positions_; }
    Point position(VertexId v) const { return positions_[v]; }
    /// Moves a vertex without touching the embedding (for perturbation tests).
    void set_position(VertexId v, Point p) { positions_[v] = p; }

    const Face& outer_face() const { return outer_; }
    const std::vector<Face>& faces() const { return faces_; }

    VertexClass vertex_class(VertexId v) const { return vertex_class_[v]; }
    bool is_internal(VertexId v) const { return vertex_class_[v] == VertexClass::Internal; }
    EdgeClass edge_class(VertexId a, VertexId b) const;

    std::vector<VertexId> internal_vertices() const;
    std::vector<EdgeKey> edges() const { return graph_.edges(); }
    /// Edges with at least one internal endpoint (canonical keys).
    std::vector<EdgeKey> internal_edges() const;
    std::vector<EdgeKey> strictly_internal_edges() const;
    /// Indices into faces() of faces whose vertices are all internal.
    std::vector<std::size_t> strictly_internal_faces() const;

    double bbox_diagonal() const;

private:
    EmbeddedDrawing() = default;

    PlanarGraph graph_;
    std::vector<Point> positions_;
    Face outer_;
    std::vector<Face> faces_;
    std::vector<VertexClass> vertex_class_;
    std::map<EdgeKey, EdgeClass> edge_class_;

    friend void classify(EmbeddedDrawing& d);
};

/// Recomputes the vertex/edge classification from outer-face membership.
void classify(EmbeddedDrawing& d);

InternalForest internal_subgraph_forest(const EmbeddedDrawing& d);

}  // namespace bary
