#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bary/forward.hpp"
#include "bary/graph.hpp"
#include "bary/recognizer.hpp"

namespace bary {

struct DocVertex {
    VertexId id = 0;
    double x = 0.0;
    double y = 0.0;
};

struct DocWeight {
    EdgeKey edge;
    double w = 0.0;
};

/// The JSON interchange format:
///   { "vertices": [{"id": 0, "x": 0.0, "y": 0.0}, ...],
///     "edges": [[0, 1], ...],
///     "outer_face": [0, 1, 2],              (optional)
///     "weights": [{"edge": [0, 3], "w": 1.0}, ...] }   (optional)
/// Unknown fields are rejected.
struct DrawingDocument {
    std::vector<DocVertex> vertices;  // sorted by id, ids 0..n-1
    std::vector<EdgeKey> edges;
    std::optional<std::vector<VertexId>> outer_face;
    std::optional<std::vector<DocWeight>> weights;
};

/// Throws ParseError (with line and column) on malformed JSON and
/// SchemaError on missing, extra or mistyped fields and dangling ids.
DrawingDocument parse_document(const std::string& text);
DrawingDocument read_document(std::istream& in);
DrawingDocument read_document_file(const std::filesystem::path& path);

/// Two-space indented JSON; reals in shortest round-trip form.
std::string format_document(const DrawingDocument& doc);
void write_document(const DrawingDocument& doc, std::ostream& out);
/// Writes to a sibling temporary file, then renames over the target.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& text);

PlanarGraph graph_of(const DrawingDocument& doc);
std::vector<Point> positions_of(const DrawingDocument& doc);
/// Empty when the document carries no weights.
WeightFunction weights_of(const DrawingDocument& doc);
/// Rotation from coordinates; outer face from the document or the hull.
EmbeddedDrawing drawing_of(const DrawingDocument& doc, const Tolerances& tol = {});
/// Outer polygon read off the document's outer_face and vertex positions,
/// oriented counter-clockwise. Throws SchemaError without outer_face.
OuterPolygon outer_polygon_of(const DrawingDocument& doc);

DrawingDocument document_of(const EmbeddedDrawing& d, const WeightFunction* weights = nullptr);
void set_weights(DrawingDocument& doc, const WeightFunction& w);

/// Machine-readable recognition result as emitted by `recognize --json`.
struct ResultDocument {
    std::string verdict;
    std::string path;
    std::string reason;
    std::vector<DocWeight> weights;
    double barycenter_residual = 0.0;
    double scale_residual = 0.0;
    double face_residual = 0.0;
    std::optional<Certificate> certificate;
    std::vector<std::string> warnings;
};

ResultDocument result_document_of(const RecognitionResult& r);
ResultDocument parse_result(const std::string& text);
std::string format_result(const ResultDocument& r);

}  // namespace bary
