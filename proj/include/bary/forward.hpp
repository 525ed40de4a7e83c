#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bary/graph.hpp"
#include "bary/types.hpp"

namespace bary {

/// Symmetric positive edge weights keyed by canonical edge.
class WeightFunction {
public:
    /// Throws InvalidInput unless w is finite and > 0.
    void set(VertexId a, VertexId b, double w);
    std::optional<double> find(VertexId a, VertexId b) const;
    /// Throws InvalidInput if the edge has no weight.
    double at(VertexId a, VertexId b) const;
    bool contains(VertexId a, VertexId b) const { return find(a, b).has_value(); }

    std::size_t size() const { return w_.size(); }
    bool empty() const { return w_.empty(); }
    const std::map<EdgeKey, double>& entries() const { return w_; }

    double max() const;
    /// Multiplies every weight by c > 0.
    void scale(double c);

private:
    std::map<EdgeKey, double> w_;
};

/// Corners of the outer face, counter-clockwise and strictly convex.
struct OuterPolygon {
    std::vector<std::pair<VertexId, Point>> corners;

    std::vector<VertexId> ids() const;
};

/// Regular polygon of the given circumradius centred at the origin with the
/// first corner at angle `phase` (radians), counter-clockwise.
OuterPolygon regular_outer_polygon(std::span<const VertexId> ids, double radius = 1.0,
                                   double phase = 1.5707963267948966);

/// Places every non-outer vertex at the weighted barycenter of its
/// neighbours. The x and y systems share one dense matrix, solved by
/// Gaussian elimination with partial pivoting. When `g` carries a rotation
/// the result keeps that embedding; otherwise the embedding is read off the
/// computed positions.
/// Throws InvalidInput for a bad outer polygon or missing weights and
/// SingularSystem when some interior component has no path to the outer face.
EmbeddedDrawing solve_barycenter(const PlanarGraph& g, const WeightFunction& weights,
                                 const OuterPolygon& outer, const Tolerances& tol = {});

/// Max over internal vertices of |gamma_i - sum w gamma_j / sum w|, divided by
/// the bounding-box diagonal. Throws InvalidInput on a missing weight.
double barycenter_residual(const EmbeddedDrawing& d, const WeightFunction& weights);

struct TutteReport {
    bool crossing_free = false;
    bool outer_convex = false;
    bool faces_convex = false;
    bool embedding_preserved = false;  // rotation read from positions matches the graph
    std::vector<std::size_t> bad_faces;

    bool ok() const { return crossing_free && outer_convex && faces_convex && embedding_preserved; }
};

/// Planarity and convexity audit of a drawing. Bounded faces must be
/// convex and counter-clockwise; the outer face strictly convex.
TutteReport verify_tutte_output(const EmbeddedDrawing& d, const Tolerances& tol = {});

}  // namespace bary
