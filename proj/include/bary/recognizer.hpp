#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bary/forward.hpp"
#include "bary/graph.hpp"
#include "bary/types.hpp"

namespace bary {

/// Convex-combination coefficients of one internal vertex over its
/// neighbours (in rotation order), plus the homogeneous directions along
/// which they may move for degree > 3.
struct VertexCoords {
    std::vector<VertexId> neighbours;
    std::vector<double> z;
    std::vector<std::vector<double>> nullspace;

    std::size_t slot(VertexId j) const;  // index of j in neighbours; throws MissingDirection
};

/// z_ij for every directed edge leaving an internal vertex.
class ZAssignment {
public:
    explicit ZAssignment(int n = 0) : coords_(n) {}

    bool has(VertexId i) const { return coords_[i].has_value(); }
    const VertexCoords& coords(VertexId i) const;
    VertexCoords& coords(VertexId i);
    void set(VertexId i, VertexCoords c) { coords_[i] = std::move(c); }

    /// Throws MissingDirection when i is not internal or j is not its neighbour.
    double at(VertexId i, VertexId j) const;
    int vertex_count() const { return static_cast<int>(coords_.size()); }

    /// Largest violation of  sum z = 1  and  sum z gamma_j = gamma_i  over all
    /// stored vertices, the latter divided by the bounding-box diagonal.
    double max_relation_residual(const EmbeddedDrawing& d) const;

private:
    std::vector<std::optional<VertexCoords>> coords_;
};

/// zeta_ij = z_ji / z_ij on strictly internal edges, stored as logarithms so
/// that log zeta_ij + log zeta_ji is exactly zero.
class ZetaRatios {
public:
    void set_log(VertexId i, VertexId j, double log_zeta_ij);
    /// Throws MissingDirection for edges without a ratio.
    double log(VertexId i, VertexId j) const;
    double ratio(VertexId i, VertexId j) const;
    bool contains(VertexId i, VertexId j) const;
    std::size_t size() const { return log_.size(); }

private:
    std::map<EdgeKey, double> log_;  // canonical key, value is log zeta_{from,to}
};

struct ScaleFactors {
    std::vector<double> s;  // NaN for external vertices
    std::vector<VertexId> roots;

    double at(VertexId v) const { return s[v]; }
};

struct ScaleCheck {
    double tree_residual = 0.0;
    double back_residual = 0.0;
    double max() const { return tree_residual > back_residual ? tree_residual : back_residual; }
};

struct FaceResidual {
    std::size_t face = 0;  // index into EmbeddedDrawing::faces()
    double log_sum = 0.0;  // sum of log zeta around the counter-clockwise cycle
    double residual() const { return log_sum < 0 ? -log_sum : log_sum; }
};

/// Coefficients from the drawing: unique barycentric coordinates for degree
/// 3, the max-min-positive solution plus nullspace otherwise. Errors from
/// the geometry (OutsideHull, CollinearNeighbours) propagate with the
/// vertex id added; an internal vertex of degree < 3 is InvalidInput.
ZAssignment compute_z(const EmbeddedDrawing& d, const Tolerances& tol = {});

/// z induced by a weight function, z_ij = w_ij / sum_k w_ik. Nullspaces are
/// recomputed from the drawing.
ZAssignment z_from_weights(const EmbeddedDrawing& d, const WeightFunction& w,
                           const Tolerances& tol = {});

ZetaRatios zeta_ratios(const ZAssignment& z, std::span<const EdgeKey> edges);
ZetaRatios zeta_ratios(const ZAssignment& z, const EmbeddedDrawing& d);

/// Residual of the cycle-product condition for each given face.
std::vector<FaceResidual> face_log_products(const ZetaRatios& zeta, const EmbeddedDrawing& d,
                                            std::span<const std::size_t> faces);
/// Same, over every strictly internal face.
std::vector<FaceResidual> face_log_products(const ZetaRatios& zeta, const EmbeddedDrawing& d);

/// Sum of log zeta along a closed walk v0 v1 ... v_{k-1} (v0 again implied).
double cycle_log_product(const ZetaRatios& zeta, std::span<const VertexId> cycle);

/// s_root = 1 per component and s_child = s_parent * zeta_{child,parent}
/// down the forest, which makes  s_i = zeta_ij s_j  hold on every tree edge.
ScaleFactors propagate_scales(const InternalForest& forest, const ZetaRatios& zeta);

/// max |s_i - zeta_ij s_j| / s_i, separately over tree and back edges.
ScaleCheck verify_scales(const ScaleFactors& s, const ZetaRatios& zeta, const InternalForest& forest);

/// w_ij = s_i z_ij. Strictly internal edges store the mean of the two
/// directed values and throw AsymmetryResidual if they disagree beyond the
/// accumulated cycle tolerance. Normalised to max weight 1 unless told not to.
WeightFunction assemble_weights(const ScaleFactors& s, const ZAssignment& z, const EmbeddedDrawing& d,
                                const Tolerances& tol = {}, bool normalise = true);

/// Rank of the weighted incidence matrix of the scale equations: one row
/// per strictly internal edge (i,j) with +z_ij at i and -z_ji at j, one
/// column per internal vertex. Rows are equilibrated, then eliminated with
/// full pivoting; pivots at or below rank_tol are zero.
std::size_t rank_of_B(const ZAssignment& z, const EmbeddedDrawing& d, double rank_tol = 1e-7);

struct HeuristicBudget {
    int starts = 100;
    int iterations = 500;
    std::uint64_t seed = 1;
};

/// Searches the nullspaces of the degree > 3 vertices for coefficients that
/// satisfy the cycle-product condition on every strictly internal face,
/// using damped Gauss-Newton steps from multiple seeded starts. A returned
/// assignment always passes face_log_products within tol.eps_cycle; throws
/// BudgetExhausted when no start converges.
ZAssignment heuristic_general(const ZAssignment& z, const EmbeddedDrawing& d,
                              const HeuristicBudget& budget = {}, const Tolerances& tol = {});

enum class Verdict { Accepted, Rejected, Invalid, Inconclusive };
enum class Mode { Exact, Heuristic, CubicOnly };
enum class DecisionPath { Validation, NoStrictCycles, CycleProducts, LpOracle, Heuristic };

std::string_view to_string(Verdict v);
std::string_view to_string(Mode m);
std::string_view to_string(DecisionPath p);

struct Certificate {
    std::size_t face = 0;
    Face vertices;
    double residual = 0.0;
};

struct RecognitionResult {
    Verdict verdict = Verdict::Invalid;
    DecisionPath path = DecisionPath::Validation;
    std::string reason;
    WeightFunction weights;                 // Accepted only
    std::optional<Certificate> certificate;  // Rejected / Inconclusive
    double max_barycenter_residual = 0.0;
    double max_scale_residual = 0.0;
    double max_face_residual = 0.0;
    std::optional<ZAssignment> z;       // the coefficients the verdict rests on
    std::optional<ScaleFactors> scales;  // Accepted only
    std::vector<std::string> warnings;
};

struct RecognizeOptions {
    Mode mode = Mode::Exact;
    Tolerances tol;
    HeuristicBudget budget;
};

/// Necessary conditions for a barycenter drawing: no crossings, bounded
/// faces convex, outer face strictly convex and equal to the convex hull.
/// Returns the first failure, or nothing.
std::optional<std::string> validate_drawing(const EmbeddedDrawing& d, const Tolerances& tol = {});

bool internal_vertices_cubic(const EmbeddedDrawing& d);

RecognitionResult recognize(const EmbeddedDrawing& d, const RecognizeOptions& options = {});

}  // namespace bary
