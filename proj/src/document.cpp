#include "bary/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bary/error.hpp"
#include "bary/geometry.hpp"

namespace bary {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw Error(Errc::SchemaError, where + ": " + what);
}

void check_keys(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
    if (!j.is_object()) schema_fail(where, "expected an object");
    for (const char* k : required) {
        if (!j.contains(k)) schema_fail(where, std::string("missing field \"") + k + "\"");
    }
    for (const auto& [key, value] : j.items()) {
        const bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return key == k; }) ||
                           std::any_of(optional.begin(), optional.end(), [&](const char* k) { return key == k; });
        if (!known) schema_fail(where, "unknown field \"" + key + "\"");
    }
}

double get_real(const Json& j, const std::string& where) {
    if (!j.is_number()) schema_fail(where, "expected a number");
    return j.get<double>();
}

int get_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) schema_fail(where, "expected an integer");
    return j.get<int>();
}

std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) schema_fail(where, "expected a string");
    return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& where) {
    if (!j.is_array()) schema_fail(where, "expected an array");
    return j;
}

EdgeKey get_pair(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) schema_fail(where, "expected a pair of vertex ids");
    return {get_int(j[0], where + "[0]"), get_int(j[1], where + "[1]")};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < std::min(e.byte > 0 ? e.byte - 1 : 0, text.size()); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                          ": " + e.what());
    }
}

Json weights_json(const std::vector<DocWeight>& weights) {
    Json arr = Json::array();
    for (const auto& w : weights) {
        Json item;
        item["edge"] = Json::array({w.edge.from, w.edge.to});
        item["w"] = w.w;
        arr.push_back(std::move(item));
    }
    return arr;
}

std::vector<DocWeight> parse_weights(const Json& arr, const std::string& where) {
    std::vector<DocWeight> out;
    for (std::size_t k = 0; k < get_array(arr, where).size(); ++k) {
        const std::string here = where + "[" + std::to_string(k) + "]";
        check_keys(arr[k], here, {"edge", "w"}, {});
        DocWeight w{get_pair(arr[k]["edge"], here + ".edge"), get_real(arr[k]["w"], here + ".w")};
        if (!(w.w > 0.0) || !std::isfinite(w.w)) schema_fail(here + ".w", "weight must be positive");
        out.push_back(w);
    }
    return out;
}

}  // namespace

DrawingDocument parse_document(const std::string& text) {
    const Json j = parse_json(text);
    check_keys(j, "document", {"vertices", "edges"}, {"outer_face", "weights"});

    DrawingDocument doc;
    const Json& verts = get_array(j["vertices"], "vertices");
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const std::string here = "vertices[" + std::to_string(k) + "]";
        check_keys(verts[k], here, {"id", "x", "y"}, {});
        doc.vertices.push_back({get_int(verts[k]["id"], here + ".id"), get_real(verts[k]["x"], here + ".x"),
                                get_real(verts[k]["y"], here + ".y")});
    }
    std::sort(doc.vertices.begin(), doc.vertices.end(),
              [](const DocVertex& a, const DocVertex& b) { return a.id < b.id; });
    for (std::size_t k = 0; k < doc.vertices.size(); ++k) {
        if (doc.vertices[k].id != static_cast<int>(k)) {
            schema_fail("vertices", "ids must be unique and contiguous from 0");
        }
    }
    const int n = static_cast<int>(doc.vertices.size());
    auto check_id = [&](int id, const std::string& where) {
        if (id < 0 || id >= n) schema_fail(where, "unknown vertex id " + std::to_string(id));
    };

    const Json& edges = get_array(j["edges"], "edges");
    std::set<EdgeKey> edge_set;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string here = "edges[" + std::to_string(k) + "]";
        const EdgeKey e = get_pair(edges[k], here);
        check_id(e.from, here);
        check_id(e.to, here);
        doc.edges.push_back(e);
        edge_set.insert(e.canonical());
    }

    if (j.contains("outer_face")) {
        std::vector<VertexId> outer;
        const Json& arr = get_array(j["outer_face"], "outer_face");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string here = "outer_face[" + std::to_string(k) + "]";
            outer.push_back(get_int(arr[k], here));
            check_id(outer.back(), here);
        }
        doc.outer_face = std::move(outer);
    }
    if (j.contains("weights")) {
        doc.weights = parse_weights(j["weights"], "weights");
        for (std::size_t k = 0; k < doc.weights->size(); ++k) {
            if (!edge_set.count((*doc.weights)[k].edge.canonical())) {
                schema_fail("weights[" + std::to_string(k) + "]", "weight on an edge that is not listed");
            }
        }
    }
    return doc;
}

DrawingDocument read_document(std::istream& in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

DrawingDocument read_document_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
    return read_document(in);
}

std::string format_document(const DrawingDocument& doc) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : doc.vertices) {
        Json item;
        item["id"] = v.id;
        item["x"] = v.x;
        item["y"] = v.y;
        j["vertices"].push_back(std::move(item));
    }
    j["edges"] = Json::array();
    for (const auto& e : doc.edges) j["edges"].push_back(Json::array({e.from, e.to}));
    if (doc.outer_face) j["outer_face"] = *doc.outer_face;
    if (doc.weights) j["weights"] = weights_json(*doc.weights);
    return j.dump(2) + "\n";
}

void write_document(const DrawingDocument& doc, std::ostream& out) { out << format_document(doc); }

void write_text_file_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::InvalidInput, "cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw Error(Errc::InvalidInput, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

PlanarGraph graph_of(const DrawingDocument& doc) {
    return PlanarGraph::from_edges(static_cast<int>(doc.vertices.size()), doc.edges);
}

std::vector<Point> positions_of(const DrawingDocument& doc) {
    std::vector<Point> pos;
    for (const auto& v : doc.vertices) pos.push_back({v.x, v.y});
    return pos;
}

WeightFunction weights_of(const DrawingDocument& doc) {
    WeightFunction w;
    if (doc.weights) {
        for (const auto& dw : *doc.weights) w.set(dw.edge.from, dw.edge.to, dw.w);
    }
    return w;
}

EmbeddedDrawing drawing_of(const DrawingDocument& doc, const Tolerances& tol) {
    return EmbeddedDrawing::from_positions(graph_of(doc), positions_of(doc), doc.outer_face, tol);
}

OuterPolygon outer_polygon_of(const DrawingDocument& doc) {
    if (!doc.outer_face) schema_fail("outer_face", "required to draw");
    OuterPolygon poly;
    for (VertexId v : *doc.outer_face) poly.corners.emplace_back(v, Point{doc.vertices[v].x, doc.vertices[v].y});
    std::vector<Point> pts;
    for (const auto& [v, p] : poly.corners) pts.push_back(p);
    if (signed_area2(pts) < 0) std::reverse(poly.corners.begin(), poly.corners.end());
    return poly;
}

void set_weights(DrawingDocument& doc, const WeightFunction& w) {
    std::vector<DocWeight> out;
    for (const auto& [e, value] : w.entries()) out.push_back({e, value});
    doc.weights = std::move(out);
}

DrawingDocument document_of(const EmbeddedDrawing& d, const WeightFunction* weights) {
    DrawingDocument doc;
    for (VertexId v = 0; v < d.vertex_count(); ++v) doc.vertices.push_back({v, d.position(v).x, d.position(v).y});
    doc.edges = d.edges();
    doc.outer_face = d.outer_face();
    if (weights) set_weights(doc, *weights);
    return doc;
}

ResultDocument result_document_of(const RecognitionResult& r) {
    ResultDocument out;
    out.verdict = std::string(to_string(r.verdict));
    out.path = std::string(to_string(r.path));
    out.reason = r.reason;
    for (const auto& [e, w] : r.weights.entries()) out.weights.push_back({e, w});
    out.barycenter_residual = r.max_barycenter_residual;
    out.scale_residual = r.max_scale_residual;
    out.face_residual = r.max_face_residual;
    out.certificate = r.certificate;
    out.warnings = r.warnings;
    return out;
}

std::string format_result(const ResultDocument& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["path"] = r.path;
    j["reason"] = r.reason;
    j["weights"] = weights_json(r.weights);
    j["residuals"] = {{"barycenter", r.barycenter_residual}, {"scale", r.scale_residual}, {"face", r.face_residual}};
    if (r.certificate) {
        j["certificate"] = {{"face", r.certificate->face},
                            {"vertices", r.certificate->vertices},
                            {"residual", r.certificate->residual}};
    } else {
        j["certificate"] = nullptr;
    }
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

ResultDocument parse_result(const std::string& text) {
    const Json j = parse_json(text);
    check_keys(j, "result", {"verdict", "path", "reason", "weights", "residuals", "certificate", "warnings"}, {});
    ResultDocument r;
    r.verdict = get_string(j["verdict"], "verdict");
    r.path = get_string(j["path"], "path");
    r.reason = get_string(j["reason"], "reason");
    r.weights = parse_weights(j["weights"], "weights");
    check_keys(j["residuals"], "residuals", {"barycenter", "scale", "face"}, {});
    r.barycenter_residual = get_real(j["residuals"]["barycenter"], "residuals.barycenter");
    r.scale_residual = get_real(j["residuals"]["scale"], "residuals.scale");
    r.face_residual = get_real(j["residuals"]["face"], "residuals.face");
    if (!j["certificate"].is_null()) {
        const Json& c = j["certificate"];
        check_keys(c, "certificate", {"face", "vertices", "residual"}, {});
        Certificate cert;
        cert.face = static_cast<std::size_t>(get_int(c["face"], "certificate.face"));
        for (const auto& v : get_array(c["vertices"], "certificate.vertices")) {
            cert.vertices.push_back(get_int(v, "certificate.vertices"));
        }
        cert.residual = get_real(c["residual"], "certificate.residual");
        r.certificate = std::move(cert);
    }
    for (const auto& w : get_array(j["warnings"], "warnings")) r.warnings.push_back(get_string(w, "warnings"));
    return r;
}

}  // namespace bary
