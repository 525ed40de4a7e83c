#include "bary/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bary/document.hpp"
#include "bary/energy.hpp"
#include "bary/error.hpp"
#include "bary/generators.hpp"
#include "bary/lp_oracle.hpp"
#include "bary/recognizer.hpp"
#include "bary/svg.hpp"

namespace bary {

namespace {

struct Options {
    std::string in;
    std::string out;
    std::uint64_t seed = 1;
    std::string mode = "exact";
    double tolerance_cycle = 1e-7;
    bool json = false;
    bool annotate = false;
    GeneratorSpec gen;
    std::string family = "prism";
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
    } else {
        write_text_file_atomic(o.out, text);
    }
}

Mode parse_mode(const std::string& s) {
    if (s == "exact") return Mode::Exact;
    if (s == "heuristic") return Mode::Heuristic;
    if (s == "cubic-only") return Mode::CubicOnly;
    throw Error(Errc::BadParameters, "unknown mode " + s);
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return kExitOk;
        case Verdict::Rejected:
        case Verdict::Inconclusive: return kExitRejected;
        case Verdict::Invalid: return kExitInvalid;
    }
    return kExitInternal;
}

int cmd_gen(const Options& o, std::ostream& out) {
    GeneratorSpec spec = o.gen;
    spec.family = family_from_string(o.family);
    spec.seed = o.seed;
    emit(o, format_document(generate(spec)), out);
    return kExitOk;
}

int cmd_draw(const Options& o, std::ostream& out) {
    DrawingDocument doc = read_document_file(o.in);
    if (!doc.weights) throw Error(Errc::SchemaError, "draw needs weights");
    const PlanarGraph g = graph_of(doc);
    const WeightFunction w = weights_of(doc);
    const EmbeddedDrawing d = solve_barycenter(g, w, outer_polygon_of(doc));
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        doc.vertices[v].x = d.position(v).x;
        doc.vertices[v].y = d.position(v).y;
    }
    emit(o, format_document(doc), out);
    return kExitOk;
}

RecognitionResult recognize_document(const DrawingDocument& doc, const RecognizeOptions& opts) {
    try {
        return recognize(drawing_of(doc, opts.tol), opts);
    } catch (const Error& e) {
        if (e.code() == Errc::NumericalFailure) throw;
        RecognitionResult r;
        r.verdict = Verdict::Invalid;
        r.reason = e.what();
        return r;
    }
}

int cmd_recognize(const Options& o, std::ostream& out) {
    DrawingDocument doc = read_document_file(o.in);
    RecognizeOptions opts;
    opts.mode = parse_mode(o.mode);
    opts.tol.eps_cycle = o.tolerance_cycle;
    opts.budget.seed = o.seed;
    const RecognitionResult r = recognize_document(doc, opts);
    if (o.json) {
        out << format_result(result_document_of(r));
    } else {
        out << to_string(r.verdict) << " (" << to_string(r.path) << ")";
        if (!r.reason.empty()) out << ": " << r.reason;
        out << "\n";
        if (r.certificate) {
            out << "certificate face " << r.certificate->face << " residual " << r.certificate->residual << "\n";
        }
        for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    }
    if (!o.out.empty() && r.verdict == Verdict::Accepted) {
        set_weights(doc, r.weights);
        write_text_file_atomic(o.out, format_document(doc));
    }
    return exit_for(r.verdict);
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const DrawingDocument doc = read_document_file(o.in);
    Tolerances tol;
    std::optional<EmbeddedDrawing> d;
    std::string reason;
    try {
        d = drawing_of(doc, tol);
        if (auto why = validate_drawing(*d, tol)) reason = *why;
    } catch (const Error& e) {
        if (e.code() == Errc::NumericalFailure) throw;
        reason = e.what();
    }
    if (!reason.empty()) {
        if (o.json) {
            nlohmann::ordered_json j{{"verdict", "invalid"}, {"reason", reason}};
            out << j.dump(2) << "\n";
        } else {
            out << "invalid: " << reason << "\n";
        }
        return kExitInvalid;
    }
    const OracleResult r = solve_strict_feasibility(build_feasibility(*d), tol);
    if (o.json) {
        nlohmann::ordered_json j;
        j["verdict"] = r.feasible() ? "feasible" : "infeasible";
        j["t_star"] = r.t_star;
        j["equation_residual"] = r.equation_residual;
        j["weights"] = nlohmann::ordered_json::array();
        for (const auto& [e, w] : r.weights.entries()) {
            j["weights"].push_back({{"edge", {e.from, e.to}}, {"w", w}});
        }
        out << j.dump(2) << "\n";
    } else {
        out << (r.feasible() ? "feasible" : "infeasible") << " (t* = " << r.t_star << ")\n";
    }
    return r.feasible() ? kExitOk : kExitRejected;
}

int cmd_energy(const Options& o, std::ostream& out) {
    const DrawingDocument doc = read_document_file(o.in);
    if (!doc.weights) throw Error(Errc::SchemaError, "energy needs weights");
    const EmbeddedDrawing d = drawing_of(doc);
    const EnergyReport rep = energy(d, weights_of(doc));
    nlohmann::ordered_json j;
    j["total"] = rep.total;
    j["per_edge"] = nlohmann::ordered_json::array();
    for (const auto& [e, eta] : rep.per_edge) j["per_edge"].push_back({{"edge", {e.from, e.to}}, {"eta", eta}});
    j["gradient"] = nlohmann::ordered_json::array();
    for (const auto& [v, g] : rep.gradient) j["gradient"].push_back({{"vertex", v}, {"dx", g.x}, {"dy", g.y}});
    j["gradient_norm_max"] = rep.gradient_norm_max;
    if (o.json) {
        out << j.dump(2) << "\n";
    } else {
        out << "energy " << rep.total << ", max gradient norm " << rep.gradient_norm_max << "\n";
    }
    return kExitOk;
}

int cmd_svg(const Options& o, std::ostream& out) {
    const DrawingDocument doc = read_document_file(o.in);
    if (!o.annotate) {
        emit(o, render_svg(doc), out);
        return kExitOk;
    }
    RecognizeOptions opts;
    opts.mode = parse_mode(o.mode);
    opts.tol.eps_cycle = o.tolerance_cycle;
    const RecognitionResult r = recognize_document(doc, opts);
    emit(o, render_svg(doc, &r), out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted barycenter drawings: draw, recognise, inspect"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_in) {
        if (needs_in) sub->add_option("--in", o.in, "input document (JSON)")->required();
        sub->add_option("--out", o.out, "output path (default: standard output)");
    };

    auto* gen = app.add_subcommand("gen", "generate a fixture document");
    add_common(gen, false);
    gen->add_option("--family", o.family, "prism | wheel | halin | stacked | nested_rotated")->required();
    gen->add_option("--k", o.gen.k, "polygon size (prism, wheel)");
    gen->add_option("--r", o.gen.inner_radius, "inner circumradius (prism, nested_rotated)");
    gen->add_option("--twist", o.gen.twist_deg, "inner polygon twist in degrees");
    gen->add_option("--n", o.gen.n, "vertex count (halin, stacked)");
    gen->add_option("--seed", o.seed, "64-bit generator seed");
    gen->add_flag("!--centroid", o.gen.forward, "stacked: keep centroid placement, skip the forward solve");

    auto* draw = app.add_subcommand("draw", "solve the barycenter equations for given weights");
    add_common(draw, true);

    auto* rec = app.add_subcommand("recognize", "decide whether a drawing is a weighted barycenter drawing");
    add_common(rec, true);
    rec->add_option("--mode", o.mode, "exact | heuristic | cubic-only")
        ->check(CLI::IsMember({"exact", "heuristic", "cubic-only"}));
    rec->add_option("--tolerance-cycle", o.tolerance_cycle, "log cycle-product tolerance")
        ->check(CLI::PositiveNumber);
    rec->add_option("--seed", o.seed, "heuristic seed");
    rec->add_flag("--json", o.json, "machine-readable result on standard output");

    auto* orc = app.add_subcommand("oracle", "run the LP feasibility oracle only");
    add_common(orc, true);
    orc->add_flag("--json", o.json, "machine-readable result");

    auto* en = app.add_subcommand("energy", "spring energy and gradient of a weighted drawing");
    add_common(en, true);
    en->add_flag("--json", o.json, "machine-readable result");

    auto* svg = app.add_subcommand("svg", "render a drawing as SVG");
    add_common(svg, true);
    svg->add_flag("--annotate", o.annotate, "run recognition and annotate the picture");
    svg->add_option("--mode", o.mode, "exact | heuristic | cubic-only")
        ->check(CLI::IsMember({"exact", "heuristic", "cubic-only"}));
    svg->add_option("--tolerance-cycle", o.tolerance_cycle, "log cycle-product tolerance")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInternal;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (draw->parsed()) return cmd_draw(o, out);
        if (rec->parsed()) return cmd_recognize(o, out);
        if (orc->parsed()) return cmd_oracle(o, out);
        if (en->parsed()) return cmd_energy(o, out);
        if (svg->parsed()) return cmd_svg(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::ParseError:
            case Errc::NumericalFailure:
            case Errc::AsymmetryResidual:
            case Errc::Disagreement: return kExitInternal;
            default: return kExitInvalid;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace bary
