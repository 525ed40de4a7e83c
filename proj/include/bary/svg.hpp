#pragma once

#include <string>

#include "bary/document.hpp"
#include "bary/recognizer.hpp"

namespace bary {

/// Deterministic SVG 1.1 picture of a drawing: the outer face as a shaded
/// polygon, edges as <line>, vertices as <circle>. With a result, accepted
/// edges get their recovered weight (3 significant digits) and a rejection
/// certificate face is filled in red.
std::string render_svg(const DrawingDocument& doc, const RecognitionResult* result = nullptr);

}  // namespace bary
