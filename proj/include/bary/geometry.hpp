#pragma once

#include <array>
#include <span>
#include <vector>

#include "bary/types.hpp"

namespace bary {

/// Length of the bounding-box diagonal; 0 for fewer than two distinct points.
double bbox_diagonal(std::span<const Point> pts);

/// Twice the signed area; positive for counter-clockwise order.
double signed_area2(std::span<const Point> polygon);

struct ConvexityReport {
    bool convex = false;  // consistent turn direction, one full winding
    bool strict = false;  // additionally no collinear consecutive triple
    bool ccw = false;     // orientation of the (convex) polygon
};

/// Cross products of consecutive edge vectors are compared against
/// eps_geom * |e1| * |e2|; anything smaller counts as collinear.
ConvexityReport is_convex_polygon(std::span<const Point> polygon, double eps_geom = 1e-9);

/// True iff no two edges without a shared endpoint touch or cross. An
/// endpoint touches a segment when it lies within an angle of eps_geom of
/// it as seen from both segment ends. Plain O(m^2) sweep over all pairs.
bool crossing_free(std::span<const Point> positions, std::span<const EdgeKey> edges,
                   double eps_geom = 1e-9);

bool segments_intersect(Point p1, Point p2, Point q1, Point q2, double eps);

/// Indices of the strict convex-hull vertices (collinear boundary points
/// dropped), counter-clockwise, starting from the lowest-leftmost point.
std::vector<std::size_t> convex_hull(std::span<const Point> pts, double eps_geom = 1e-9);

/// Unique barycentric coordinates of p with respect to triangle abc.
/// Throws CollinearNeighbours for a degenerate triangle and OutsideHull
/// unless every coordinate exceeds tol.eps_pos.
std::array<double, 3> barycentric_deg3(Point p, Point a, Point b, Point c,
                                       const Tolerances& tol = {});

/// Solutions z of  sum z = 1,  sum z_j q_j = p.
struct ConvexCoords {
    std::vector<double> base;                    // strictly positive particular solution
    std::vector<std::vector<double>> nullspace;  // orthonormal homogeneous solutions
};

/// For degree 3 this is barycentric_deg3 with an empty nullspace. For higher
/// degree the base maximises the smallest coefficient over the affine
/// solution set (a small LP); it must exceed tol.eps_pos or OutsideHull is
/// thrown.
ConvexCoords convex_coords_general(Point p, std::span<const Point> neighbours,
                                   const Tolerances& tol = {});

}  // namespace bary
