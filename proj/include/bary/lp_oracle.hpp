#pragma once

#include <vector>

#include "bary/forward.hpp"
#include "bary/graph.hpp"
#include "bary/linalg.hpp"
#include "bary/recognizer.hpp"

namespace bary {

/// Barycenter equations cleared of denominators,
///   sum_j w_ij (gamma_j - gamma_i) = 0   (x and y rows per internal vertex),
/// as a homogeneous system in the internal-edge weights. Coordinates are
/// divided by the bounding-box diagonal.
struct FeasibilityProblem {
    Matrix a;                         // rows 2k, 2k+1 belong to vertices[k]
    std::vector<EdgeKey> variables;   // internal edges, canonical
    std::vector<VertexId> vertices;   // internal vertices
};

FeasibilityProblem build_feasibility(const EmbeddedDrawing& d);

enum class OracleVerdict { Feasible, Infeasible };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::Infeasible;
    WeightFunction weights;   // Feasible only; sums to 1
    double t_star = 0.0;      // smallest weight of the max-min solution
    double equation_residual = 0.0;

    bool feasible() const { return verdict == OracleVerdict::Feasible; }
};

/// maximise t  s.t.  A w = 0,  sum w = 1,  w >= t,  t >= 0.
/// Feasible iff t* > tol.eps_lp. Throws NumericalFailure if the simplex hits
/// its iteration cap or the optimal w leaves |A w| above 1e-9.
OracleResult solve_strict_feasibility(const FeasibilityProblem& problem, const Tolerances& tol = {});

struct CrossValidation {
    Verdict recognizer = Verdict::Invalid;
    OracleVerdict oracle = OracleVerdict::Infeasible;
    bool proportional = true;      // per interior component, Accepted pairs only
    double max_ratio_spread = 0.0;  // relative spread of w_rec / w_oracle
};

/// Runs the cycle-product recogniser and the oracle on a drawing whose
/// internal vertices all have degree 3. Throws Disagreement if the verdicts
/// differ or accepted weight vectors are not proportional per component,
/// and InvalidInput for invalid or non-cubic drawings.
CrossValidation cross_validate(const EmbeddedDrawing& d, const Tolerances& tol = {});

}  // namespace bary
