#pragma once

#include <cstddef>
#include <vector>

#include "bary/linalg.hpp"

namespace bary {

/// maximise c.x  subject to  A x = b,  x >= 0
struct LinearProgram {
    Matrix a;
    std::vector<double> b;
    std::vector<double> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    std::size_t iterations = 0;
};

/// Dense two-phase revised simplex. Pricing is Dantzig's; after m
/// consecutive degenerate pivots Bland's rule takes over until the
/// objective moves again, so it cannot cycle. Phase I starts from
/// one artificial variable per equality row. Each phase is capped at
/// 10 * (rows + cols) pivots; exceeding the cap throws
/// Error(NumericalFailure).
LpSolution solve_lp(const LinearProgram& lp, double tol = 1e-10);

}  // namespace bary
