#include "bary/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bary/error.hpp"

namespace bary {

namespace {

// Revised simplex over [A | I]; the last m columns are artificials. The
// basis is re-solved from the original rows every iteration: one dense
// factorisation per pivot, but no round-off carried from pivot to pivot.
class Revised {
public:
    Revised(const LinearProgram& lp, double tol) : m_(lp.a.rows()), n_(lp.a.cols()), tol_(tol), a_(lp.a), b_(lp.b) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (b_[i] < 0) {
                b_[i] = -b_[i];
                for (double& v : a_.row(i)) v = -v;
            }
            basis_.push_back(n_ + i);
        }
    }

    double column(std::size_t j, std::size_t i) const {
        if (j < n_) return a_(i, j);
        return j - n_ == i ? 1.0 : 0.0;
    }

    std::vector<double> solve(bool transpose, const std::vector<double>& rhs) const {
        Matrix bm(m_, m_);
        for (std::size_t k = 0; k < m_; ++k) {
            for (std::size_t i = 0; i < m_; ++i) {
                if (transpose) {
                    bm(k, i) = column(basis_[k], i);
                } else {
                    bm(i, k) = column(basis_[k], i);
                }
            }
        }
        Matrix r(m_, 1);
        for (std::size_t i = 0; i < m_; ++i) r(i, 0) = rhs[i];
        Matrix x;
        try {
            x = solve_dense(std::move(bm), std::move(r), 1e-14);
        } catch (const Error&) {
            throw Error(Errc::NumericalFailure, "simplex basis became singular");
        }
        std::vector<double> out(m_);
        for (std::size_t i = 0; i < m_; ++i) out[i] = x(i, 0);
        return out;
    }

    std::vector<double> basic_values() const {
        std::vector<double> x = solve(false, b_);
        for (double& v : x) {
            if (v < 0.0 && v > -tol_) v = 0.0;
        }
        return x;
    }

    // Maximises cost.x with entering columns drawn from [0, allowed).
    // Returns false when unbounded.
    bool optimise(const std::vector<double>& cost, std::size_t allowed, std::size_t& iterations) {
        const std::size_t cap = 10 * (m_ + n_);
        std::size_t stalled = 0;
        bool bland = false;
        for (std::size_t it = 0;; ++it) {
            if (it >= cap) throw Error(Errc::NumericalFailure, "simplex iteration cap reached");
            const std::vector<double> xb = basic_values();
            std::vector<double> cb(m_);
            for (std::size_t k = 0; k < m_; ++k) cb[k] = cost[basis_[k]];
            const std::vector<double> y = solve(true, cb);

            std::vector<bool> basic(n_ + m_, false);
            for (std::size_t j : basis_) basic[j] = true;
            std::size_t enter = allowed;
            double steepest = 0.0;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (basic[j]) continue;
                double reduced = cost[j];
                double mag = std::abs(cost[j]);
                for (std::size_t i = 0; i < m_; ++i) {
                    reduced -= y[i] * column(j, i);
                    mag += std::abs(y[i] * column(j, i));
                }
                // Relative test: y inherits the conditioning of the basis.
                if (reduced <= tol_ * std::max(1.0, mag)) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (reduced > steepest) {
                    steepest = reduced;
                    enter = j;
                }
            }
            if (enter == allowed) return true;

            std::vector<double> aj(m_);
            for (std::size_t i = 0; i < m_; ++i) aj[i] = column(enter, i);
            const std::vector<double> dir = solve(false, aj);

            // Pivots small relative to the column would wreck the next basis.
            double dmax = 0.0;
            for (double v : dir) dmax = std::max(dmax, v);
            const double floor = std::max(1e-9, 1e-7 * dmax);
            std::size_t leave = m_;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < m_; ++k) {
                if (dir[k] <= floor) continue;
                const double ratio = std::max(0.0, xb[k]) / dir[k];
                if (leave == m_ || ratio < best - tol_) {
                    best = ratio;
                    leave = k;
                } else if (ratio <= best + tol_ && basis_[k] < basis_[leave]) {
                    best = std::min(best, ratio);
                    leave = k;
                }
            }
            if (leave == m_) return false;
            basis_[leave] = enter;
            ++iterations;
            // Cycling needs a run of degenerate pivots; Bland's rule takes
            // over for the rest of such a run.
            stalled = best <= tol_ ? stalled + 1 : 0;
            bland = stalled >= m_;
        }
    }

    // Swaps basic artificials for structural columns where the basis row
    // allows it. Rows that cannot be cleared are redundant.
    void evict_artificials() {
        for (std::size_t k = 0; k < m_; ++k) {
            if (basis_[k] < n_) continue;
            std::vector<double> unit(m_, 0.0);
            unit[k] = 1.0;
            const std::vector<double> rho = solve(true, unit);
            std::vector<bool> basic(n_, false);
            for (std::size_t j : basis_) {
                if (j < n_) basic[j] = true;
            }
            std::size_t best = n_;
            double mag = 1e-9;
            for (std::size_t j = 0; j < n_; ++j) {
                if (basic[j]) continue;
                double alpha = 0.0;
                for (std::size_t i = 0; i < m_; ++i) alpha += rho[i] * a_(i, j);
                if (std::abs(alpha) > mag) {
                    mag = std::abs(alpha);
                    best = j;
                }
            }
            if (best < n_) basis_[k] = best;
        }
    }

    std::vector<double> primal(std::size_t count) const {
        const std::vector<double> xb = basic_values();
        std::vector<double> x(count, 0.0);
        for (std::size_t k = 0; k < m_; ++k) {
            if (basis_[k] < count) x[basis_[k]] = std::max(0.0, xb[k]);
        }
        return x;
    }

private:
    std::size_t m_, n_;
    double tol_;
    Matrix a_;
    std::vector<double> b_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double tol) {
    const std::size_t m = lp.a.rows();
    const std::size_t n = lp.a.cols();
    if (lp.b.size() != m || lp.c.size() != n) {
        throw Error(Errc::InvalidInput, "solve_lp: dimension mismatch");
    }

    // Rows and columns of very different magnitude make the tolerances
    // meaningless, so both are scaled to unit max norm first; x = C x'.
    LinearProgram scaled = lp;
    for (std::size_t i = 0; i < m; ++i) {
        double big = 0.0;
        for (std::size_t j = 0; j < n; ++j) big = std::max(big, std::abs(scaled.a(i, j)));
        if (big == 0.0) continue;
        for (double& v : scaled.a.row(i)) v /= big;
        scaled.b[i] /= big;
    }
    std::vector<double> colscale(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        double big = 0.0;
        for (std::size_t i = 0; i < m; ++i) big = std::max(big, std::abs(scaled.a(i, j)));
        if (big == 0.0) continue;
        colscale[j] = 1.0 / big;
        for (std::size_t i = 0; i < m; ++i) scaled.a(i, j) *= colscale[j];
        scaled.c[j] *= colscale[j];
    }

    LpSolution out;
    Revised rs(scaled, tol);

    std::vector<double> phase1(n + m, 0.0);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1.0;
    rs.optimise(phase1, n + m, out.iterations);

    double bmax = 1.0;
    for (double v : scaled.b) bmax = std::max(bmax, std::abs(v));
    const std::vector<double> all = rs.primal(n + m);
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m; ++i) infeasibility += all[n + i];
    if (infeasibility > 1e-9 * bmax) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    rs.evict_artificials();

    std::vector<double> phase2(n + m, 0.0);
    std::copy(scaled.c.begin(), scaled.c.end(), phase2.begin());
    if (!rs.optimise(phase2, n, out.iterations)) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    out.status = LpStatus::Optimal;
    out.x = rs.primal(n);
    for (std::size_t j = 0; j < n; ++j) out.x[j] *= colscale[j];
    out.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) out.objective += lp.c[j] * out.x[j];
    return out;
}

}  // namespace bary
