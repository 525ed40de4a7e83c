#include "bary/lp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bary/error.hpp"
#include "bary/simplex.hpp"

namespace bary {

FeasibilityProblem build_feasibility(const EmbeddedDrawing& d) {
    FeasibilityProblem p;
    p.vertices = d.internal_vertices();
    p.variables = d.internal_edges();
    std::map<EdgeKey, std::size_t> column;
    for (std::size_t c = 0; c < p.variables.size(); ++c) column[p.variables[c]] = c;

    const double diag = d.bbox_diagonal();
    const double inv = diag > 0 ? 1.0 / diag : 1.0;
    p.a = Matrix(2 * p.vertices.size(), p.variables.size());
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
        const VertexId i = p.vertices[k];
        for (VertexId j : d.graph().adjacency[i]) {
            const Point e = inv * (d.position(j) - d.position(i));
            const std::size_t c = column.at(EdgeKey{i, j}.canonical());
            p.a(2 * k, c) = e.x;
            p.a(2 * k + 1, c) = e.y;
        }
    }
    return p;
}

OracleResult solve_strict_feasibility(const FeasibilityProblem& problem, const Tolerances& tol) {
    OracleResult out;
    const std::size_t rows = problem.a.rows();
    const std::size_t e = problem.variables.size();
    if (e == 0) {
        out.verdict = OracleVerdict::Feasible;
        out.t_star = 1.0;
        return out;
    }

    // Substitute w = t + u with u >= 0. Columns: u_0..u_{e-1}, t.
    LinearProgram lp{Matrix(rows + 1, e + 1), std::vector<double>(rows + 1, 0.0),
                     std::vector<double>(e + 1, 0.0)};
    for (std::size_t r = 0; r < rows; ++r) {
        double rowsum = 0.0;
        for (std::size_t c = 0; c < e; ++c) {
            lp.a(r, c) = problem.a(r, c);
            rowsum += problem.a(r, c);
        }
        lp.a(r, e) = rowsum;
    }
    for (std::size_t c = 0; c < e; ++c) lp.a(rows, c) = 1.0;
    lp.a(rows, e) = static_cast<double>(e);
    lp.b[rows] = 1.0;
    lp.c[e] = 1.0;

    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) {
        out.verdict = OracleVerdict::Infeasible;
        return out;
    }
    out.t_star = sol.x[e];
    if (out.t_star <= tol.eps_lp) {
        out.verdict = OracleVerdict::Infeasible;
        return out;
    }

    std::vector<double> w(e);
    for (std::size_t c = 0; c < e; ++c) w[c] = sol.x[c] + out.t_star;
    const auto aw = multiply(problem.a, w);
    for (double v : aw) out.equation_residual = std::max(out.equation_residual, std::abs(v));
    if (out.equation_residual > 1e-9) {
        throw Error(Errc::NumericalFailure,
                    "oracle solution violates the equations by " + std::to_string(out.equation_residual));
    }
    out.verdict = OracleVerdict::Feasible;
    for (std::size_t c = 0; c < e; ++c) {
        out.weights.set(problem.variables[c].from, problem.variables[c].to, w[c]);
    }
    return out;
}

CrossValidation cross_validate(const EmbeddedDrawing& d, const Tolerances& tol) {
    if (!internal_vertices_cubic(d)) {
        throw Error(Errc::InvalidInput, "cross validation needs every internal vertex to have degree 3");
    }
    CrossValidation cv;
    RecognizeOptions opts;
    opts.mode = Mode::CubicOnly;
    opts.tol = tol;
    const RecognitionResult rec = recognize(d, opts);
    if (rec.verdict == Verdict::Invalid) throw Error(Errc::InvalidInput, "drawing is invalid: " + rec.reason);
    const OracleResult orc = solve_strict_feasibility(build_feasibility(d), tol);
    cv.recognizer = rec.verdict;
    cv.oracle = orc.verdict;

    if ((rec.verdict == Verdict::Accepted) != orc.feasible()) {
        throw Error(Errc::Disagreement, std::string("recogniser says ") + std::string(to_string(rec.verdict)) +
                                            ", oracle says " + (orc.feasible() ? "feasible" : "infeasible"));
    }
    if (!orc.feasible()) return cv;

    // Both weight vectors fix one scale per interior component, so their
    // ratio must be constant on each component.
    const InternalForest forest = internal_subgraph_forest(d);
    std::vector<double> lo(forest.component_count(), INFINITY), hi(forest.component_count(), 0.0);
    for (const EdgeKey& e : d.internal_edges()) {
        const VertexId owner = d.is_internal(e.from) ? e.from : e.to;
        const int comp = forest.component[owner];
        const double r = rec.weights.at(e.from, e.to) / orc.weights.at(e.from, e.to);
        lo[comp] = std::min(lo[comp], r);
        hi[comp] = std::max(hi[comp], r);
    }
    for (std::size_t c = 0; c < lo.size(); ++c) {
        cv.max_ratio_spread = std::max(cv.max_ratio_spread, (hi[c] - lo[c]) / hi[c]);
    }
    cv.proportional = cv.max_ratio_spread <= 1e-6;
    if (!cv.proportional) {
        throw Error(Errc::Disagreement, "accepted weight vectors are not proportional");
    }
    return cv;
}

}  // namespace bary
