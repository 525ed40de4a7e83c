// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

#include "bary/cli.hpp"
#include "bary/energy.hpp"
#include "bary/error.hpp"
#include "bary/lp_oracle.hpp"
#include "support.hpp"

using namespace bary;
using namespace bary::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

/// The 50 forward-solved instances shared by criteria 1, 2, 6, 7 and 8:
/// prisms k = 3..8, wheels, Halin graphs and stacked triangulations up to
/// n = 60, each drawn with log-uniform weights in [0.1, 10].
std::vector<Instance> forward_corpus() {
    Rng rng(20261018);
    std::vector<Instance> out;
    for (int k = 3; k <= 8; ++k) out.push_back(forward_instance(generate(GeneratorSpec{Family::Prism, k}), rng));
    for (int k = 3; k <= 12; ++k) out.push_back(forward_instance(generate(GeneratorSpec{Family::Wheel, k}), rng));
    for (int i = 0; i < 14; ++i) {
        GeneratorSpec s{Family::Halin};
        s.n = 6 + 3 * i;
        s.seed = 100 + static_cast<std::uint64_t>(i);
        out.push_back(forward_instance(generate(s), rng));
    }
    for (int i = 0; i < 20; ++i) {
        GeneratorSpec s{Family::Stacked};
        s.n = 6 + (54 * i) / 19;  // 6 .. 60
        s.seed = 200 + static_cast<std::uint64_t>(i);
        s.forward = false;
        out.push_back(forward_instance(generate(s), rng));
    }
    return out;
}

bool interior_connected(const EmbeddedDrawing& d) { return internal_subgraph_forest(d).component_count() <= 1; }

Outcome criterion1(const std::vector<Instance>& corpus, double seconds) {
    Outcome o;
    o.require(corpus.size() == 50, "corpus size");
    int good = 0;
    for (const Instance& in : corpus) good += verify_tutte_output(in.drawing).ok();
    o.require(good == 50, fmt("%d/50 planar and convex", good));
    o.require(seconds < 5.0, fmt("took %.2f s", seconds));
    if (o.pass) o.detail = fmt("50/50 planar with convex faces in %.2f s", seconds);
    return o;
}

Outcome criterion2(const std::vector<Instance>& corpus) {
    Outcome o;
    int good = 0;
    double worst = 0;
    for (const Instance& in : corpus) {
        const RecognitionResult r = recognize(in.drawing);
        if (r.verdict != Verdict::Accepted) continue;
        const double gap = position_gap(in.drawing, redraw(in.drawing, r.weights));
        worst = std::max(worst, gap);
        good += gap <= 1e-8;
    }
    o.require(good == 50, fmt("%d/50 accepted and reproduced", good));
    o.detail = o.pass ? fmt("50/50 accepted, worst redraw gap %.1e", worst) : o.detail;
    return o;
}

Outcome criterion3() {
    Outcome o;
    const Face inner{3, 4, 5};
    for (double twist : {0.0, 5.0, 10.0, 20.0}) {
        GeneratorSpec s{Family::NestedRotated};
        s.twist_deg = twist;
        const EmbeddedDrawing d = drawing_of(generate(s));
        RecognizeOptions cubic;
        cubic.mode = Mode::CubicOnly;
        const RecognitionResult r = recognize(d, cubic);
        const bool feasible = solve_strict_feasibility(build_feasibility(d)).feasible();
        if (twist == 0.0) {
            o.require(r.verdict == Verdict::Accepted && feasible, "aligned drawing not accepted/feasible");
        } else {
            o.require(r.verdict == Verdict::Rejected && r.path == DecisionPath::CycleProducts,
                      fmt("twist %.0f not rejected by cycle products", twist));
            o.require(!feasible, fmt("twist %.0f feasible", twist));
            o.require(r.certificate && same_cycle(r.certificate->vertices, inner),
                      fmt("twist %.0f certificate is not the inner triangle", twist));
        }
    }
    if (o.pass) o.detail = "0 deg accepted/feasible; 5, 10, 20 deg rejected/infeasible on the inner triangle";
    return o;
}

Outcome criterion4() {
    Outcome o;
    Rng rng(4);
    int agree = 0, total = 0, rejected = 0;
    std::uint64_t seed = 1;
    auto judge = [&](const EmbeddedDrawing& d) {
        ++total;
        RecognizeOptions cubic;
        cubic.mode = Mode::CubicOnly;
        const Verdict v = recognize(d, cubic).verdict;
        const bool feasible = solve_strict_feasibility(build_feasibility(d)).feasible();
        agree += (v == Verdict::Accepted && feasible) || (v == Verdict::Rejected && !feasible);
        rejected += v == Verdict::Rejected;
    };
    int forward = 0, nudged = 0;
    while (forward < 100 || nudged < 100) {
        const auto [g, outer] = cubic_dual(5 + static_cast<int>(seed % 16), seed);
        ++seed;
        const Instance in = forward_instance(g, outer, rng);
        if (forward < 100) {
            judge(in.drawing);
            ++forward;
        }
        if (nudged < 100) {
            if (auto p = perturbed(in.drawing, rng)) {
                judge(*p);
                ++nudged;
            }
        }
    }
    o.require(total == 200 && agree == 200, fmt("%d/%d agree", agree, total));
    if (o.pass) o.detail = fmt("200/200 agree (%d rejected)", rejected);
    return o;
}

Outcome criterion5() {
    Outcome o;
    Rng rng(5);
    int accepted = 0, total = 0;
    for (std::uint64_t i = 0; i < 10; ++i) {
        GeneratorSpec s{Family::Halin};
        s.n = 8 + 4 * static_cast<int>(i);
        s.seed = 500 + i;
        const EmbeddedDrawing fwd = drawing_of(generate(s));
        ++total;
        accepted += recognize(fwd).verdict == Verdict::Accepted;
        // hand-positioned: every internal vertex moved while faces stay convex
        const EmbeddedDrawing moved = nudged_each(fwd, rng, 0.3);
        o.require(position_gap(fwd, moved) > 1e-3, "hand-positioned drawing barely differs");
        ++total;
        const RecognitionResult r = recognize(moved);
        accepted += r.verdict == Verdict::Accepted && position_gap(moved, redraw(moved, r.weights)) <= 1e-8;
    }
    o.require(total == 20 && accepted == 20, fmt("%d/%d accepted", accepted, total));
    if (o.pass) o.detail = "20/20 accepted (10 forward-solved, 10 hand-positioned)";
    return o;
}

/// Shared by criteria 6 and 7: every accepted and rejected instance we build.
struct Verdicts {
    std::vector<std::pair<EmbeddedDrawing, RecognitionResult>> accepted, rejected;
};

Verdicts collect(const std::vector<Instance>& corpus) {
    Verdicts v;
    for (const Instance& in : corpus) v.accepted.emplace_back(in.drawing, recognize(in.drawing));
    Rng rng(6);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto [g, outer] = cubic_dual(6 + static_cast<int>(seed % 12), seed);
        const Instance in = forward_instance(g, outer, rng);
        v.accepted.emplace_back(in.drawing, recognize(in.drawing));
        if (auto p = perturbed(in.drawing, rng)) {
            RecognitionResult r = recognize(*p);
            if (r.verdict == Verdict::Rejected) v.rejected.emplace_back(*p, std::move(r));
        }
    }
    for (int i = 0; i < 10; ++i) {
        const Instance in = forward_instance(octahedron(), {0, 1, 2}, rng);
        v.accepted.emplace_back(in.drawing, recognize(in.drawing));
    }
    for (double twist : {5.0, 10.0, 20.0}) {
        GeneratorSpec s{Family::NestedRotated};
        s.twist_deg = twist;
        const EmbeddedDrawing d = drawing_of(generate(s));
        v.rejected.emplace_back(d, recognize(d));
    }
    return v;
}

Outcome criterion6(const Verdicts& v) {
    Outcome o;
    int ok = 0, n = 0;
    for (const auto& [d, r] : v.accepted) {
        if (r.verdict != Verdict::Accepted || !interior_connected(d)) continue;
        ++n;
        ok += rank_of_B(*r.z, d) + 1 == d.internal_vertices().size();
    }
    int okr = 0, nr = 0;
    for (const auto& [d, r] : v.rejected) {
        ++nr;
        okr += rank_of_B(*r.z, d) == d.internal_vertices().size();
    }
    o.require(ok == n && n > 0, fmt("accepted: %d/%d have rank n-f0-1", ok, n));
    o.require(okr == nr && nr > 0, fmt("rejected: %d/%d have rank n-f0", okr, nr));
    if (o.pass) o.detail = fmt("%d accepted at n-f0-1, %d cubic rejected at n-f0", n, nr);
    return o;
}

Outcome criterion7(const Verdicts& v) {
    Outcome o;
    int ok = 0, n = 0;
    for (const auto& [d, r] : v.accepted) {
        if (r.verdict != Verdict::Accepted) continue;
        ++n;
        bool pos = r.scales.has_value();
        for (VertexId i : d.internal_vertices()) pos = pos && r.scales->at(i) > 0;
        ok += pos;
    }
    o.require(ok == n && n > 0, fmt("%d/%d all-positive", ok, n));
    if (o.pass) o.detail = fmt("%d/%d accepted instances have all s_i > 0", ok, n);
    return o;
}

Outcome criterion8(const std::vector<Instance>& corpus) {
    Outcome o;
    Rng rng(8);
    double worst_fd = 0;
    int fd_n = 0;
    for (std::size_t i = 0; i < corpus.size() && fd_n < 20; i += 2, ++fd_n) {
        const Instance& in = corpus[i];
        const auto p = perturbed(in.drawing, rng);
        const EmbeddedDrawing& d = p ? *p : in.drawing;
        worst_fd = std::max(worst_fd, gradient_check(d, in.weights, 1e-5 * d.bbox_diagonal()));
    }
    o.require(fd_n == 20 && worst_fd <= 1e-6, fmt("gradient check error %.2e", worst_fd));

    int stationary = 0, moved = 0, n = 0;
    for (const Instance& in : corpus) {
        const RecognitionResult r = recognize(in.drawing);
        if (r.verdict != Verdict::Accepted) continue;
        ++n;
        const double scale = 1e-8 * in.drawing.bbox_diagonal() * r.weights.max();
        stationary += energy(in.drawing, r.weights).gradient_norm_max <= scale;
        if (auto p = perturbed(in.drawing, rng)) moved += energy(*p, r.weights).gradient_norm_max > scale;
        else ++moved;
    }
    o.require(stationary == n && moved == n, fmt("stationary %d/%d, perturbed non-stationary %d/%d", stationary, n, moved, n));

    int probes = 0, down = 0;
    for (double twist : {5.0, 10.0, 20.0, -20.0}) {
        GeneratorSpec s{Family::NestedRotated};
        s.twist_deg = twist;
        const EmbeddedDrawing d = drawing_of(generate(s));
        for (int t = 0; t < 5; ++t) {
            WeightFunction w;
            for (const EdgeKey& e : d.internal_edges()) w.set(e.from, e.to, rng.log_uniform(0.1, 10));
            ++probes;
            down += rotation_perturbation_probe(d, w, 1e-3).min() < 0;
        }
    }
    o.require(down == probes, fmt("rotation probe lowered energy %d/%d", down, probes));
    if (o.pass) {
        o.detail = fmt("fd error %.1e on 20; stationary %d/%d; probe %d/%d", worst_fd, stationary, n, down, probes);
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    Rng rng(9);
    HeuristicBudget budget;
    budget.starts = 30;
    budget.iterations = 300;
    int feasible = 0, heur_ret = 0, heur_ok = 0, n = 0;
    int variants = 0, false_accepts = 0, infeasible_variants = 0;
    for (int i = 0; i < 20; ++i) {
        Instance in = i < 10 ? forward_instance(octahedron(), {0, 1, 2}, rng)
                             : forward_instance(generate(GeneratorSpec{Family::Stacked, 3, 0.4, 0, 6 + 2 * i,
                                                                       static_cast<std::uint64_t>(900 + i), false}),
                                                rng);
        ++n;
        const EmbeddedDrawing& d = in.drawing;
        feasible += solve_strict_feasibility(build_feasibility(d)).feasible();
        budget.seed = static_cast<std::uint64_t>(i + 1);
        try {
            const ZAssignment h = heuristic_general(compute_z(d), d, budget);
            ++heur_ret;
            double worst = 0;
            for (const auto& f : face_log_products(zeta_ratios(h, d), d)) worst = std::max(worst, f.residual());
            heur_ok += worst <= 1e-7;
        } catch (const Error& e) {
            if (e.code() != Errc::BudgetExhausted) throw;
        }
        if (auto p = perturbed(d, rng)) {
            ++variants;
            const bool truth = solve_strict_feasibility(build_feasibility(*p)).feasible();
            infeasible_variants += !truth;
            RecognizeOptions opt;
            opt.mode = Mode::Heuristic;
            opt.budget = budget;
            const RecognitionResult r = recognize(*p, opt);
            false_accepts += r.verdict == Verdict::Accepted && !truth;
        }
    }
    o.require(feasible == n, fmt("oracle feasible %d/%d", feasible, n));
    o.require(heur_ok == heur_ret, fmt("heuristic returned %d, %d pass faces", heur_ret, heur_ok));
    o.require(false_accepts == 0, fmt("%d false heuristic accepts", false_accepts));
    if (o.pass) {
        o.detail = fmt("oracle %d/%d feasible; heuristic %d/%d returned, all sound; %d variants (%d infeasible), 0 false accepts",
                       feasible, n, heur_ret, n, variants, infeasible_variants);
    }
    return o;
}

int run(std::vector<std::string> args, std::string* out = nullptr) {
    args.insert(args.begin(), "bary");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
    if (out) *out = o.str();
    return code;
}

Outcome criterion10() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / "bary_acceptance";
    fs::create_directories(dir);
    const std::string aligned = (dir / "prism_aligned.json").string();
    const std::string rotated = (dir / "nested_rotated_20.json").string();
    const std::string crossing = (dir / "has_crossing.json").string();
    o.require(run({"gen", "--family", "prism", "--r", "0.25", "--out", aligned}) == 0, "gen prism");
    o.require(run({"gen", "--family", "nested_rotated", "--twist", "20", "--out", rotated}) == 0, "gen nested_rotated");
    DrawingDocument cross = read_document_file(aligned);
    cross.vertices[3].x = 0.0;
    cross.vertices[3].y = -0.9;  // inner vertex dragged across the outer triangle's interior
    write_text_file_atomic(crossing, format_document(cross));

    const int c0 = run({"recognize", "--in", aligned});
    const int c1 = run({"recognize", "--in", rotated});
    const int c2 = run({"recognize", "--in", crossing});
    o.require(c0 == 0 && c1 == 1 && c2 == 2, fmt("exit codes %d/%d/%d", c0, c1, c2));

    int lossless = 0;
    for (const std::string& p : {aligned, rotated, crossing}) {
        std::string text, again;
        run({"recognize", "--in", p, "--json"}, &text);
        run({"recognize", "--in", p, "--json"}, &again);
        try {
            lossless += format_result(parse_result(text)) == text && text == again;
        } catch (const Error&) {
        }
    }
    o.require(lossless == 3, fmt("%d/3 json outputs round-trip", lossless));
    if (o.pass) o.detail = "exit codes 0/1/2; --json round-trips byte for byte";
    return o;
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& f) {
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    };

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Instance> corpus = forward_corpus();
    double seconds = 0;
    {
        int ok = 0;
        for (const Instance& in : corpus) ok += verify_tutte_output(in.drawing).ok();
        (void)ok;
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    report(1, "forward planar/convex", [&] { return criterion1(corpus, seconds); });
    report(2, "round-trip recognition", [&] { return criterion2(corpus); });
    report(3, "rotated-triangle reject", [] { return criterion3(); });
    report(4, "cycle test vs oracle", [] { return criterion4(); });
    report(5, "Halin accept", [] { return criterion5(); });
    Verdicts verdicts;
    try {
        verdicts = collect(corpus);
    } catch (const std::exception& e) {
        std::printf("collect failed: %s\n", e.what());
    }
    report(6, "rank of B", [&] { return criterion6(verdicts); });
    report(7, "positive scale factors", [&] { return criterion7(verdicts); });
    report(8, "energy", [&] { return criterion8(corpus); });
    report(9, "general degree", [] { return criterion9(); });
    report(10, "CLI contract", [] { return criterion10(); });

    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
