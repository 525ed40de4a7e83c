#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bary/forward.hpp"
#include "bary/graph.hpp"

namespace bary {

/// Spring energy of the internal edges, eta(i,j) = w_ij |gamma_i - gamma_j|^2 / 2.
struct EnergyReport {
    double total = 0.0;
    std::map<EdgeKey, double> per_edge;
    std::vector<std::pair<VertexId, Point>> gradient;  // d eta / d gamma_i, internal vertices
    double gradient_norm_max = 0.0;
};

EnergyReport energy(const EmbeddedDrawing& d, const WeightFunction& w);

/// Total energy only, for arbitrary positions over the drawing's graph.
double total_energy(const EmbeddedDrawing& d, std::span<const Point> positions, const WeightFunction& w);

/// Compares the analytic gradient with central differences of step h.
/// Returns max |analytic - numeric| / max(max|analytic|, w_max * bbox).
double gradient_check(const EmbeddedDrawing& d, const WeightFunction& w, double h);

/// True for the nested-polygon family: k outer vertices, k internal
/// vertices forming a cycle, and one spoke from each inner vertex outwards.
bool is_nested_prism(const EmbeddedDrawing& d);

struct RotationProbe {
    double delta_plus = 0.0;   // eta(rotated +eps) - eta
    double delta_minus = 0.0;  // eta(rotated -eps) - eta
    double min() const { return delta_plus < delta_minus ? delta_plus : delta_minus; }
};

/// Rotates the inner polygon rigidly about its centroid by +-eps radians
/// and reports the energy change. Throws WrongFamily unless is_nested_prism.
RotationProbe rotation_perturbation_probe(const EmbeddedDrawing& d, const WeightFunction& w, double eps);

}  // namespace bary
