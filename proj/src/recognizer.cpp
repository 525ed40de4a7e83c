#include "bary/recognizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bary/error.hpp"
#include "bary/geometry.hpp"
#include "bary/linalg.hpp"
#include "bary/lp_oracle.hpp"
#include "bary/rng.hpp"

namespace bary {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return "accepted";
        case Verdict::Rejected: return "rejected";
        case Verdict::Invalid: return "invalid";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::Exact: return "exact";
        case Mode::Heuristic: return "heuristic";
        case Mode::CubicOnly: return "cubic-only";
    }
    return "?";
}

std::string_view to_string(DecisionPath p) {
    switch (p) {
        case DecisionPath::Validation: return "validation";
        case DecisionPath::NoStrictCycles: return "no-strict-cycles";
        case DecisionPath::CycleProducts: return "cycle-products";
        case DecisionPath::LpOracle: return "lp-oracle";
        case DecisionPath::Heuristic: return "heuristic";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// z coefficients

std::size_t VertexCoords::slot(VertexId j) const {
    auto it = std::find(neighbours.begin(), neighbours.end(), j);
    if (it == neighbours.end()) throw Error(Errc::MissingDirection, "not a neighbour: " + std::to_string(j));
    return static_cast<std::size_t>(it - neighbours.begin());
}

const VertexCoords& ZAssignment::coords(VertexId i) const {
    if (i < 0 || i >= vertex_count() || !coords_[i]) {
        throw Error(Errc::MissingDirection, "vertex " + std::to_string(i) + " has no coefficients");
    }
    return *coords_[i];
}

VertexCoords& ZAssignment::coords(VertexId i) {
    if (i < 0 || i >= vertex_count() || !coords_[i]) {
        throw Error(Errc::MissingDirection, "vertex " + std::to_string(i) + " has no coefficients");
    }
    return *coords_[i];
}

double ZAssignment::at(VertexId i, VertexId j) const {
    const VertexCoords& c = coords(i);
    return c.z[c.slot(j)];
}

double ZAssignment::max_relation_residual(const EmbeddedDrawing& d) const {
    const double diag = d.bbox_diagonal();
    double worst = 0.0;
    for (VertexId i = 0; i < vertex_count(); ++i) {
        if (!coords_[i]) continue;
        const VertexCoords& c = *coords_[i];
        double sum = 0.0;
        Point acc{};
        for (std::size_t k = 0; k < c.z.size(); ++k) {
            sum += c.z[k];
            acc = acc + c.z[k] * d.position(c.neighbours[k]);
        }
        worst = std::max(worst, std::abs(sum - 1.0));
        worst = std::max(worst, norm(acc - d.position(i)) / diag);
    }
    return worst;
}

namespace {

std::vector<std::vector<double>> local_nullspace(const EmbeddedDrawing& d, VertexId i,
                                                 std::span<const VertexId> nbrs) {
    if (nbrs.size() <= 3) return {};
    double scale = 0.0;
    for (VertexId j : nbrs) scale = std::max(scale, norm(d.position(j) - d.position(i)));
    Matrix m(3, nbrs.size());
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const Point e = (1.0 / scale) * (d.position(nbrs[k]) - d.position(i));
        m(0, k) = 1.0;
        m(1, k) = e.x;
        m(2, k) = e.y;
    }
    return nullspace(m, 1e-12);
}

}  // namespace

ZAssignment compute_z(const EmbeddedDrawing& d, const Tolerances& tol) {
    ZAssignment z(d.vertex_count());
    for (VertexId i : d.internal_vertices()) {
        const auto& nbrs = d.graph().rotation[i];
        if (nbrs.size() < 3) {
            throw Error(Errc::InvalidInput, "internal vertex " + std::to_string(i) + " has degree " +
                                                std::to_string(nbrs.size()));
        }
        std::vector<Point> pts;
        for (VertexId j : nbrs) pts.push_back(d.position(j));
        try {
            ConvexCoords cc = convex_coords_general(d.position(i), pts, tol);
            z.set(i, {nbrs, std::move(cc.base), std::move(cc.nullspace)});
        } catch (const Error& e) {
            throw Error(e.code(), "vertex " + std::to_string(i) + ": " + e.what());
        }
    }
    return z;
}

ZAssignment z_from_weights(const EmbeddedDrawing& d, const WeightFunction& w, const Tolerances&) {
    ZAssignment z(d.vertex_count());
    for (VertexId i : d.internal_vertices()) {
        const auto& nbrs = d.graph().rotation[i];
        VertexCoords c;
        c.neighbours = nbrs;
        double total = 0.0;
        for (VertexId j : nbrs) {
            c.z.push_back(w.at(i, j));
            total += c.z.back();
        }
        for (double& v : c.z) v /= total;
        c.nullspace = local_nullspace(d, i, nbrs);
        z.set(i, std::move(c));
    }
    return z;
}

// ---------------------------------------------------------------------------
// zeta, cycle products, scale factors

void ZetaRatios::set_log(VertexId i, VertexId j, double log_zeta_ij) {
    const EdgeKey key = EdgeKey{i, j}.canonical();
    log_[key] = key.from == i ? log_zeta_ij : -log_zeta_ij;
}

double ZetaRatios::log(VertexId i, VertexId j) const {
    const EdgeKey key = EdgeKey{i, j}.canonical();
    auto it = log_.find(key);
    if (it == log_.end()) {
        throw Error(Errc::MissingDirection,
                    "no ratio on edge " + std::to_string(i) + "-" + std::to_string(j));
    }
    return key.from == i ? it->second : -it->second;
}

double ZetaRatios::ratio(VertexId i, VertexId j) const { return std::exp(log(i, j)); }

bool ZetaRatios::contains(VertexId i, VertexId j) const {
    return log_.count(EdgeKey{i, j}.canonical()) > 0;
}

ZetaRatios zeta_ratios(const ZAssignment& z, std::span<const EdgeKey> edges) {
    ZetaRatios out;
    for (const EdgeKey& e : edges) {
        const double zij = z.at(e.from, e.to);
        const double zji = z.at(e.to, e.from);
        if (!(zij > 0.0) || !(zji > 0.0)) {
            throw Error(Errc::MissingDirection, "non-positive coefficient on edge " +
                                                    std::to_string(e.from) + "-" + std::to_string(e.to));
        }
        out.set_log(e.from, e.to, std::log(zji) - std::log(zij));
    }
    return out;
}

ZetaRatios zeta_ratios(const ZAssignment& z, const EmbeddedDrawing& d) {
    const auto edges = d.strictly_internal_edges();
    return zeta_ratios(z, edges);
}

double cycle_log_product(const ZetaRatios& zeta, std::span<const VertexId> cycle) {
    double acc = 0.0;
    for (std::size_t k = 0; k < cycle.size(); ++k) acc += zeta.log(cycle[k], cycle[(k + 1) % cycle.size()]);
    return acc;
}

std::vector<FaceResidual> face_log_products(const ZetaRatios& zeta, const EmbeddedDrawing& d,
                                            std::span<const std::size_t> faces) {
    std::vector<FaceResidual> out;
    for (std::size_t f : faces) out.push_back({f, cycle_log_product(zeta, d.faces()[f])});
    return out;
}

std::vector<FaceResidual> face_log_products(const ZetaRatios& zeta, const EmbeddedDrawing& d) {
    const auto faces = d.strictly_internal_faces();
    return face_log_products(zeta, d, faces);
}

ScaleFactors propagate_scales(const InternalForest& forest, const ZetaRatios& zeta) {
    ScaleFactors out;
    out.roots = forest.roots;
    std::vector<double> log_s(forest.parent.size(), std::numeric_limits<double>::quiet_NaN());
    for (VertexId v : forest.order) {
        const VertexId p = forest.parent[v];
        // s_p = zeta_pc s_c  =>  s_c = s_p * zeta_cp
        log_s[v] = p < 0 ? 0.0 : log_s[p] + zeta.log(v, p);
    }
    out.s.resize(log_s.size());
    std::transform(log_s.begin(), log_s.end(), out.s.begin(), [](double l) { return std::exp(l); });
    return out;
}

ScaleCheck verify_scales(const ScaleFactors& s, const ZetaRatios& zeta, const InternalForest& forest) {
    auto resid = [&](const EdgeKey& e) {
        const double si = s.at(e.from);
        return std::abs(si - zeta.ratio(e.from, e.to) * s.at(e.to)) / si;
    };
    ScaleCheck out;
    for (const EdgeKey& e : forest.tree_edges) out.tree_residual = std::max(out.tree_residual, resid(e));
    for (const EdgeKey& e : forest.back_edges) out.back_residual = std::max(out.back_residual, resid(e));
    return out;
}

WeightFunction assemble_weights(const ScaleFactors& s, const ZAssignment& z, const EmbeddedDrawing& d,
                                const Tolerances& tol, bool normalise) {
    const double bound =
        tol.eps_cycle * static_cast<double>(1 + d.strictly_internal_faces().size()) + 1e-12;
    std::map<EdgeKey, double> raw;
    for (const EdgeKey& e : d.internal_edges()) {
        const bool a_in = d.is_internal(e.from);
        const bool b_in = d.is_internal(e.to);
        if (a_in && b_in) {
            const double wa = s.at(e.from) * z.at(e.from, e.to);
            const double wb = s.at(e.to) * z.at(e.to, e.from);
            if (std::abs(std::log(wa / wb)) > bound) {
                throw Error(Errc::AsymmetryResidual, "edge " + std::to_string(e.from) + "-" +
                                                         std::to_string(e.to) + ": " + std::to_string(wa) +
                                                         " vs " + std::to_string(wb));
            }
            raw[e] = 0.5 * (wa + wb);
        } else {
            const VertexId i = a_in ? e.from : e.to;
            const VertexId j = a_in ? e.to : e.from;
            raw[e] = s.at(i) * z.at(i, j);
        }
    }
    double top = 0.0;
    for (const auto& [e, w] : raw) top = std::max(top, w);
    WeightFunction out;
    for (const auto& [e, w] : raw) out.set(e.from, e.to, normalise ? w / top : w);
    return out;
}

std::size_t rank_of_B(const ZAssignment& z, const EmbeddedDrawing& d, double rank_tol) {
    const auto internal = d.internal_vertices();
    const auto edges = d.strictly_internal_edges();
    if (edges.empty() || internal.empty()) return 0;
    std::vector<int> col(d.vertex_count(), -1);
    for (std::size_t k = 0; k < internal.size(); ++k) col[internal[k]] = static_cast<int>(k);
    Matrix bt(edges.size(), internal.size());
    for (std::size_t r = 0; r < edges.size(); ++r) {
        const auto [i, j] = edges[r];
        const double a = z.at(i, j);
        const double b = z.at(j, i);
        const double m = std::max(a, b);
        bt(r, col[i]) = a / m;
        bt(r, col[j]) = -b / m;
    }
    return rank(std::move(bt), rank_tol);
}

// ---------------------------------------------------------------------------
// heuristic search over the nullspaces

namespace {

struct DirectedStep {
    VertexId u, v;
    std::size_t slot_uv;  // position of v among u's neighbours
    std::size_t slot_vu;
};

// Coefficients below this are treated as sitting on the positivity floor.
constexpr double kNearFloor = 1e-6;

class NullspaceSearch {
public:
    NullspaceSearch(const ZAssignment& z, const EmbeddedDrawing& d, const Tolerances& tol)
        : base_(z), tol_(tol), offset_(d.vertex_count(), -1) {
        for (VertexId v : d.internal_vertices()) {
            const auto& c = z.coords(v);
            if (c.nullspace.empty()) continue;
            offset_[v] = static_cast<int>(dims_);
            dims_ += c.nullspace.size();
            free_.push_back(v);
        }
        for (std::size_t f : d.strictly_internal_faces()) {
            const Face& face = d.faces()[f];
            std::vector<DirectedStep> steps;
            for (std::size_t k = 0; k < face.size(); ++k) {
                const VertexId u = face[k];
                const VertexId v = face[(k + 1) % face.size()];
                steps.push_back({u, v, z.coords(u).slot(v), z.coords(v).slot(u)});
            }
            faces_.push_back(std::move(steps));
        }
    }

    std::size_t dims() const { return dims_; }
    std::size_t equations() const { return faces_.size(); }

    // Current coefficients of every free vertex, or nothing if some
    // coefficient falls below the positivity floor.
    bool apply(std::span<const double> alpha, ZAssignment& out) const {
        out = base_;
        for (VertexId v : free_) {
            const auto& b = base_.coords(v);
            auto& c = out.coords(v);
            for (std::size_t k = 0; k < b.nullspace.size(); ++k) {
                const double a = alpha[offset_[v] + k];
                for (std::size_t s = 0; s < c.z.size(); ++s) c.z[s] += a * b.nullspace[k][s];
            }
            for (double zv : c.z) {
                if (!(zv >= tol_.eps_pos)) return false;
            }
        }
        return true;
    }

    std::vector<double> residuals(const ZAssignment& z) const {
        std::vector<double> r;
        for (const auto& steps : faces_) {
            double acc = 0.0;
            for (const auto& st : steps) {
                acc += std::log(z.coords(st.v).z[st.slot_vu]) - std::log(z.coords(st.u).z[st.slot_uv]);
            }
            r.push_back(acc);
        }
        return r;
    }

    Matrix jacobian(const ZAssignment& z) const {
        Matrix j(faces_.size(), dims_);
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            for (const auto& st : faces_[f]) {
                add_derivative(j, f, z, st.v, st.slot_vu, +1.0);
                add_derivative(j, f, z, st.u, st.slot_uv, -1.0);
            }
        }
        return j;
    }

    // Largest step from `from` along a nullspace direction that keeps every
    // z above the floor.
    double max_step(const ZAssignment& from, std::span<const double> dir) const {
        double tmax = std::numeric_limits<double>::infinity();
        for (VertexId v : free_) {
            const auto& b = base_.coords(v);
            const auto& c = from.coords(v);
            for (std::size_t s = 0; s < b.z.size(); ++s) {
                double dz = 0.0;
                for (std::size_t k = 0; k < b.nullspace.size(); ++k) dz += dir[offset_[v] + k] * b.nullspace[k][s];
                if (dz < 0) tmax = std::min(tmax, (c.z[s] - tol_.eps_pos) / -dz);
            }
        }
        return tmax;
    }

    // Free-coordinate gradient of one coefficient z_{v,s}.
    std::vector<double> coefficient_row(VertexId v, std::size_t s) const {
        std::vector<double> row(dims_, 0.0);
        const auto& b = base_.coords(v);
        for (std::size_t k = 0; k < b.nullspace.size(); ++k) row[offset_[v] + k] = b.nullspace[k][s];
        return row;
    }

    // Coefficients within `near` of the floor that `dir` would push lower.
    std::vector<std::pair<VertexId, std::size_t>> blocking(const ZAssignment& from, std::span<const double> dir,
                                                           double near) const {
        std::vector<std::pair<VertexId, std::size_t>> out;
        for (VertexId v : free_) {
            const auto& b = base_.coords(v);
            const auto& c = from.coords(v);
            for (std::size_t s = 0; s < b.z.size(); ++s) {
                if (c.z[s] > near) continue;
                double dz = 0.0;
                for (std::size_t k = 0; k < b.nullspace.size(); ++k) dz += dir[offset_[v] + k] * b.nullspace[k][s];
                if (dz < 0) out.emplace_back(v, s);
            }
        }
        return out;
    }

private:
    void add_derivative(Matrix& j, std::size_t row, const ZAssignment& z, VertexId v, std::size_t slot,
                        double sign) const {
        if (offset_[v] < 0) return;
        const auto& b = base_.coords(v);
        const double zv = z.coords(v).z[slot];
        for (std::size_t k = 0; k < b.nullspace.size(); ++k) {
            j(row, offset_[v] + k) += sign * b.nullspace[k][slot] / zv;
        }
    }

    ZAssignment base_;
    Tolerances tol_;
    std::vector<int> offset_;
    std::vector<VertexId> free_;
    std::size_t dims_ = 0;
    std::vector<std::vector<DirectedStep>> faces_;
};

double sum_sq(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

double max_abs(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

}  // namespace

ZAssignment heuristic_general(const ZAssignment& z, const EmbeddedDrawing& d, const HeuristicBudget& budget,
                              const Tolerances& tol) {
    const NullspaceSearch search(z, d, tol);
    const double target = 0.5 * tol.eps_cycle;

    if (search.dims() == 0) {
        if (max_abs(search.residuals(z)) <= target) return z;
        throw Error(Errc::BudgetExhausted, "no free coefficients and the cycle condition fails");
    }

    Rng rng(budget.seed);
    ZAssignment cur, trial;
    const std::size_t n = search.dims();
    for (int start = 0; start < budget.starts; ++start) {
        std::vector<double> alpha(n, 0.0);
        if (start > 0) {
            std::vector<double> dir(n);
            for (double& x : dir) x = rng.normal();
            double tmax = search.max_step(z, dir);
            if (!std::isfinite(tmax)) tmax = 1.0;
            const double t = rng.uniform(0.05, 0.95) * tmax;
            for (std::size_t k = 0; k < n; ++k) alpha[k] = t * dir[k];
        }
        if (!search.apply(alpha, cur)) continue;
        auto r = search.residuals(cur);
        double f = sum_sq(r);
        double lambda = 1e-3;
        for (int it = 0; it < budget.iterations; ++it) {
            if (max_abs(r) <= target) {
                const auto check = face_log_products(zeta_ratios(cur, d), d);
                const bool ok = std::all_of(check.begin(), check.end(),
                                            [&](const FaceResidual& fr) { return fr.residual() <= tol.eps_cycle; });
                if (ok) return cur;
                break;
            }
            const Matrix j = search.jacobian(cur);
            // Damped Gauss-Newton restricted to directions that do not push
            // coefficients already at the floor any lower.
            std::vector<std::pair<VertexId, std::size_t>> active;
            std::vector<double> step;
            bool solved = false;
            for (int pass = 0; pass < 4; ++pass) {
                Matrix q;  // n x p basis of the allowed directions
                if (active.empty()) {
                    q = Matrix(n, n);
                    for (std::size_t k = 0; k < n; ++k) q(k, k) = 1.0;
                } else {
                    Matrix c(active.size(), n);
                    for (std::size_t a = 0; a < active.size(); ++a) {
                        const auto row = search.coefficient_row(active[a].first, active[a].second);
                        for (std::size_t k = 0; k < n; ++k) c(a, k) = row[k];
                    }
                    const auto basis = nullspace(c);
                    q = Matrix(n, basis.size());
                    for (std::size_t b = 0; b < basis.size(); ++b) {
                        for (std::size_t k = 0; k < n; ++k) q(k, b) = basis[b][k];
                    }
                }
                const std::size_t p = q.cols();
                if (p == 0) break;
                Matrix jq(j.rows(), p);
                for (std::size_t row = 0; row < j.rows(); ++row) {
                    for (std::size_t b = 0; b < p; ++b) {
                        double acc = 0.0;
                        for (std::size_t k = 0; k < n; ++k) acc += j(row, k) * q(k, b);
                        jq(row, b) = acc;
                    }
                }
                // (Jq^T Jq + lambda (diag + 1e-12)) beta = -Jq^T r
                Matrix normal(p, p), rhs(p, 1);
                for (std::size_t a = 0; a < p; ++a) {
                    for (std::size_t b = 0; b < p; ++b) {
                        double acc = 0.0;
                        for (std::size_t row = 0; row < jq.rows(); ++row) acc += jq(row, a) * jq(row, b);
                        normal(a, b) = acc;
                    }
                    double g = 0.0;
                    for (std::size_t row = 0; row < jq.rows(); ++row) g += jq(row, a) * r[row];
                    rhs(a, 0) = -g;
                }
                for (std::size_t a = 0; a < p; ++a) normal(a, a) += lambda * (normal(a, a) + 1e-12);
                Matrix beta;
                try {
                    beta = solve_dense(normal, rhs, 1e-300);
                } catch (const Error&) {
                    break;
                }
                step.assign(n, 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t b = 0; b < p; ++b) step[k] += q(k, b) * beta(b, 0);
                }
                const auto blocked = search.blocking(cur, step, kNearFloor);
                if (blocked.empty()) {
                    solved = true;
                    break;
                }
                active.insert(active.end(), blocked.begin(), blocked.end());
            }
            if (!solved) {
                lambda *= 10.0;
                if (lambda > 1e12) break;
                continue;
            }
            std::vector<double> next(alpha);
            // stop short of the positivity floor rather than jumping past it
            const double frac = std::min(1.0, 0.9 * search.max_step(cur, step));
            for (std::size_t k = 0; k < n; ++k) next[k] += frac * step[k];
            if (search.apply(next, trial)) {
                auto r_next = search.residuals(trial);
                const double f_next = sum_sq(r_next);
                if (f_next < f) {
                    alpha = std::move(next);
                    std::swap(cur, trial);
                    r = std::move(r_next);
                    f = f_next;
                    lambda = std::max(lambda / 3.0, 1e-12);
                    continue;
                }
            }
            lambda *= 4.0;
            if (lambda > 1e12) break;
        }
    }
    throw Error(Errc::BudgetExhausted, "no start satisfied every face within the budget");
}

// ---------------------------------------------------------------------------
// driver

std::optional<std::string> validate_drawing(const EmbeddedDrawing& d, const Tolerances& tol) {
    const auto edges = d.edges();
    if (!crossing_free(d.positions(), edges, tol.eps_geom)) return "edges cross";

    try {
        const auto rot = rotation_from_positions(d.graph().adjacency, d.positions(), tol.eps_angle);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (!same_rotation(rot[v], d.graph().rotation[v])) {
                return "embedding disagrees with the positions at vertex " + std::to_string(v);
            }
        }
    } catch (const Error& e) {
        return std::string(e.what());
    }

    std::vector<Point> outer;
    for (VertexId v : d.outer_face()) outer.push_back(d.position(v));
    const auto oc = is_convex_polygon(outer, tol.eps_geom);
    if (!oc.convex || !oc.strict) return "outer face is not a strictly convex polygon";

    std::vector<VertexId> hull;
    for (std::size_t i : convex_hull(d.positions(), tol.eps_geom)) hull.push_back(static_cast<VertexId>(i));
    if (!same_cycle(hull, d.outer_face())) return "outer face is not the convex hull";

    for (std::size_t f = 0; f < d.faces().size(); ++f) {
        std::vector<Point> pts;
        for (VertexId v : d.faces()[f]) pts.push_back(d.position(v));
        const auto c = is_convex_polygon(pts, tol.eps_geom);
        if (!c.convex || !c.ccw) return "face " + std::to_string(f) + " is not convex";
    }
    return std::nullopt;
}

bool internal_vertices_cubic(const EmbeddedDrawing& d) {
    for (VertexId v : d.internal_vertices()) {
        if (d.graph().degree(v) != 3) return false;
    }
    return true;
}

namespace {

Certificate worst_face(const std::vector<FaceResidual>& res, const EmbeddedDrawing& d) {
    auto it = std::max_element(res.begin(), res.end(), [](const FaceResidual& a, const FaceResidual& b) {
        return a.residual() < b.residual();
    });
    return {it->face, d.faces()[it->face], it->residual()};
}

double max_residual(const std::vector<FaceResidual>& res) {
    double m = 0.0;
    for (const auto& r : res) m = std::max(m, r.residual());
    return m;
}

void accept(RecognitionResult& out, const EmbeddedDrawing& d, ZAssignment z, const InternalForest& forest,
            DecisionPath path, const Tolerances& tol) {
    out.path = path;
    try {
        const ZetaRatios zeta = zeta_ratios(z, d);
        out.max_face_residual = max_residual(face_log_products(zeta, d));
        ScaleFactors s = propagate_scales(forest, zeta);
        out.max_scale_residual = verify_scales(s, zeta, forest).max();
        out.weights = assemble_weights(s, z, d, tol);
        out.max_barycenter_residual = barycenter_residual(d, out.weights);
        out.scales = std::move(s);
        out.z = std::move(z);
        out.verdict = Verdict::Accepted;
        if (out.max_barycenter_residual > tol.eps_residual) {
            out.warnings.push_back("recovered weights reproduce the drawing only to " +
                                   std::to_string(out.max_barycenter_residual));
        }
    } catch (const Error& e) {
        out.verdict = Verdict::Inconclusive;
        out.reason = std::string("weight assembly failed: ") + e.what();
    }
}

}  // namespace

RecognitionResult recognize(const EmbeddedDrawing& d, const RecognizeOptions& options) {
    const Tolerances& tol = options.tol;
    RecognitionResult out;

    if (auto why = validate_drawing(d, tol)) {
        out.verdict = Verdict::Invalid;
        out.reason = *why;
        return out;
    }
    ZAssignment z;
    try {
        z = compute_z(d, tol);
    } catch (const Error& e) {
        out.verdict = Verdict::Invalid;
        out.reason = e.what();
        return out;
    }

    const InternalForest forest = internal_subgraph_forest(d);
    if (forest.component_count() > 1) {
        out.warnings.push_back("internal vertices induce " + std::to_string(forest.component_count()) +
                               " components; the graph is probably not triconnected");
    }

    if (d.strictly_internal_faces().empty()) {
        accept(out, d, std::move(z), forest, DecisionPath::NoStrictCycles, tol);
        return out;
    }

    const auto faces = face_log_products(zeta_ratios(z, d), d);
    out.max_face_residual = max_residual(faces);
    const bool passes = out.max_face_residual <= tol.eps_cycle;
    if (passes) {
        accept(out, d, std::move(z), forest, DecisionPath::CycleProducts, tol);
        return out;
    }

    const Certificate cert = worst_face(faces, d);
    if (internal_vertices_cubic(d)) {
        out.path = DecisionPath::CycleProducts;
        out.verdict = Verdict::Rejected;
        out.reason = "cycle product around a strictly internal face is not 1";
        out.certificate = cert;
        out.z = std::move(z);
        return out;
    }

    switch (options.mode) {
        case Mode::CubicOnly:
            out.path = DecisionPath::CycleProducts;
            out.verdict = Verdict::Inconclusive;
            out.reason = "the max-min coefficients fail the cycle condition; higher-degree vertices need --mode exact";
            out.certificate = cert;
            out.z = std::move(z);
            return out;
        case Mode::Exact: {
            const OracleResult orc = solve_strict_feasibility(build_feasibility(d), tol);
            if (orc.feasible()) {
                accept(out, d, z_from_weights(d, orc.weights, tol), forest, DecisionPath::LpOracle, tol);
            } else {
                out.path = DecisionPath::LpOracle;
                out.verdict = Verdict::Rejected;
                out.reason = "no strictly positive weights satisfy the barycenter equations";
                out.certificate = cert;
                out.z = std::move(z);
            }
            return out;
        }
        case Mode::Heuristic:
            try {
                accept(out, d, heuristic_general(z, d, options.budget, tol), forest, DecisionPath::Heuristic, tol);
            } catch (const Error& e) {
                if (e.code() != Errc::BudgetExhausted) throw;
                out.path = DecisionPath::Heuristic;
                out.verdict = Verdict::Inconclusive;
                out.reason = e.what();
                out.certificate = cert;
                out.z = std::move(z);
            }
            return out;
    }
    return out;
}

}  // namespace bary
