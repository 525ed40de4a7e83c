#include "bary/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bary/error.hpp"
#include "bary/linalg.hpp"
#include "bary/simplex.hpp"

namespace bary {

double bbox_diagonal(std::span<const Point> pts) {
    if (pts.empty()) return 0.0;
    double lx = pts[0].x, hx = pts[0].x, ly = pts[0].y, hy = pts[0].y;
    for (const Point& p : pts) {
        lx = std::min(lx, p.x);
        hx = std::max(hx, p.x);
        ly = std::min(ly, p.y);
        hy = std::max(hy, p.y);
    }
    return std::hypot(hx - lx, hy - ly);
}

double signed_area2(std::span<const Point> polygon) {
    double a = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        a += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
    }
    return a;
}

ConvexityReport is_convex_polygon(std::span<const Point> polygon, double eps_geom) {
    ConvexityReport rep;
    const std::size_t n = polygon.size();
    if (n < 3) return rep;

    int sign = 0;
    bool collinear = false;
    double winding = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point e1 = polygon[i] - polygon[(i + n - 1) % n];
        const Point e2 = polygon[(i + 1) % n] - polygon[i];
        const double l1 = norm(e1), l2 = norm(e2);
        if (l1 == 0.0 || l2 == 0.0) return rep;
        const double c = cross(e1, e2);
        const double d = dot(e1, e2);
        winding += std::atan2(c, d);
        if (std::abs(c) <= eps_geom * l1 * l2) {
            if (d <= 0.0) return rep;  // spike
            collinear = true;
            continue;
        }
        const int s = c > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return rep;
    }
    // A pentagram turns consistently but winds twice.
    if (sign == 0 || std::abs(std::abs(winding) - 2.0 * std::numbers::pi) > 1e-6) return rep;
    rep.convex = true;
    rep.strict = !collinear;
    rep.ccw = sign > 0;
    return rep;
}

namespace {

// Side of c relative to the line ab. Zero when the turn angle at a is below
// eps, so the test scales with the local geometry rather than the bbox.
int side(Point a, Point b, Point c, double eps) {
    const double o = cross(b - a, c - a);
    const double scale = eps * norm(b - a) * norm(c - a);
    if (o > scale) return 1;
    if (o < -scale) return -1;
    return 0;
}

bool on_segment(Point p, Point a, Point b, double eps) {
    if (p == a || p == b) return true;
    if (side(a, b, p, eps) != 0 || side(b, a, p, eps) != 0) return false;
    return dot(p - a, b - a) > 0.0 && dot(p - b, a - b) > 0.0;
}

}  // namespace

bool segments_intersect(Point p1, Point p2, Point q1, Point q2, double eps) {
    if (on_segment(p1, q1, q2, eps) || on_segment(p2, q1, q2, eps) || on_segment(q1, p1, p2, eps) ||
        on_segment(q2, p1, p2, eps)) {
        return true;
    }
    return side(q1, q2, p1, eps) * side(q1, q2, p2, eps) < 0 && side(p1, p2, q1, eps) * side(p1, p2, q2, eps) < 0;
}

bool crossing_free(std::span<const Point> positions, std::span<const EdgeKey> edges,
                   double eps_geom) {
    for (std::size_t a = 0; a < edges.size(); ++a) {
        const auto [u1, v1] = edges[a];
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const auto [u2, v2] = edges[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            if (segments_intersect(positions[u1], positions[v1], positions[u2], positions[v2],
                                   eps_geom)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> convex_hull(std::span<const Point> pts, double eps_geom) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (pts.size() < 3) return idx;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].y < pts[b].y || (pts[a].y == pts[b].y && pts[a].x < pts[b].x);
    });
    const double diag = bbox_diagonal(pts);
    const double eps_abs = eps_geom * diag * diag;

    // Monotone chain, sorted by y then x; strictly left turns only.
    std::vector<std::size_t> hull;
    auto chain = [&](auto begin, auto end) {
        const std::size_t floor = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= floor + 2 &&
                   cross(pts[hull[hull.size() - 1]] - pts[hull[hull.size() - 2]],
                         pts[*it] - pts[hull[hull.size() - 1]]) <= eps_abs) {
                hull.pop_back();
            }
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    chain(idx.begin(), idx.end());
    chain(idx.rbegin(), idx.rend());
    return hull;
}

std::array<double, 3> barycentric_deg3(Point p, Point a, Point b, Point c, const Tolerances& tol) {
    const std::array<Point, 4> all{p, a, b, c};
    const double diag = bbox_diagonal(all);
    const double area = cross(b - a, c - a);
    if (std::abs(area) <= tol.eps_geom * diag * diag) {
        throw Error(Errc::CollinearNeighbours, "neighbour triangle is degenerate");
    }
    std::array<double, 3> z{cross(b - p, c - p) / area, cross(c - p, a - p) / area,
                            cross(a - p, b - p) / area};
    if (std::min({z[0], z[1], z[2]}) <= tol.eps_pos) {
        throw Error(Errc::OutsideHull, "point is not strictly inside its neighbour triangle");
    }
    return z;
}

ConvexCoords convex_coords_general(Point p, std::span<const Point> neighbours,
                                   const Tolerances& tol) {
    const std::size_t d = neighbours.size();
    if (d < 3) throw Error(Errc::InvalidInput, "convex coordinates need at least 3 neighbours");
    if (d == 3) {
        const auto z = barycentric_deg3(p, neighbours[0], neighbours[1], neighbours[2], tol);
        return {{z[0], z[1], z[2]}, {}};
    }

    double scale = 0.0;
    for (const Point& q : neighbours) scale = std::max(scale, norm(q - p));
    if (scale == 0.0) throw Error(Errc::CollinearNeighbours, "neighbours coincide with vertex");

    // Rows: sum z = 1, sum z (q - p)/scale = 0.
    Matrix m(3, d);
    for (std::size_t j = 0; j < d; ++j) {
        const Point e = (1.0 / scale) * (neighbours[j] - p);
        m(0, j) = 1.0;
        m(1, j) = e.x;
        m(2, j) = e.y;
    }
    if (rank(m, tol.eps_geom) < 3) {
        throw Error(Errc::CollinearNeighbours, "neighbours are collinear");
    }

    // z = t + u, maximise t. Columns: u_0..u_{d-1}, t.
    LinearProgram lp{Matrix(3, d + 1), {1.0, 0.0, 0.0}, std::vector<double>(d + 1, 0.0)};
    for (std::size_t r = 0; r < 3; ++r) {
        double rowsum = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            lp.a(r, j) = m(r, j);
            rowsum += m(r, j);
        }
        lp.a(r, d) = rowsum;
    }
    lp.c[d] = 1.0;
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal || sol.x[d] <= tol.eps_pos) {
        throw Error(Errc::OutsideHull, "vertex is not strictly inside the hull of its neighbours");
    }

    std::vector<double> z(d);
    for (std::size_t j = 0; j < d; ++j) z[j] = sol.x[j] + sol.x[d];

    // One orthogonal projection back onto the affine set removes tableau
    // roundoff: z -= M^T (M M^T)^{-1} (M z - rhs).
    const auto mz = multiply(m, z);
    Matrix gram(3, 3), resid(3, 1);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            double acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) acc += m(r, j) * m(c, j);
            gram(r, c) = acc;
        }
    }
    resid(0, 0) = mz[0] - 1.0;
    resid(1, 0) = mz[1];
    resid(2, 0) = mz[2];
    const Matrix lambda = solve_dense(gram, resid);
    for (std::size_t j = 0; j < d; ++j) {
        z[j] -= m(0, j) * lambda(0, 0) + m(1, j) * lambda(1, 0) + m(2, j) * lambda(2, 0);
    }

    return {std::move(z), nullspace(m, 1e-12)};
}

}  // namespace bary
