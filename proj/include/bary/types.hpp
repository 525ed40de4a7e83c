#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>

namespace bary {

using VertexId = int;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point, Point) = default;

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

/// Directed edge (from, to). Symmetric maps key on canonical(), which puts
/// the smaller id first so that (i,j) and (j,i) collide.
struct EdgeKey {
    VertexId from = 0;
    VertexId to = 0;

    EdgeKey canonical() const { return {std::min(from, to), std::max(from, to)}; }
    EdgeKey reversed() const { return {to, from}; }

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Numerical tolerances. Geometric ones are relative to the bounding-box
/// diagonal of the drawing.
struct Tolerances {
    double eps_geom = 1e-9;
    double eps_cycle = 1e-7;
    double eps_residual = 1e-9;
    double eps_angle = 1e-9;
    double eps_pos = 1e-9;
    double eps_lp = 1e-9;
};

}  // namespace bary

template <>
struct std::hash<bary::EdgeKey> {
    std::size_t operator()(const bary::EdgeKey& e) const noexcept {
        return std::hash<long long>{}((static_cast<long long>(e.from) << 32) ^
                                      static_cast<unsigned>(e.to));
    }
};
