#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bary/document.hpp"

namespace bary {

enum class Family { Prism, Wheel, Halin, Stacked, NestedRotated };

std::string_view to_string(Family f);
/// Throws BadParameters for an unknown name.
Family family_from_string(std::string_view name);

/// Parameters per family (others are ignored):
///   prism          k >= 3, 0 < inner_radius < 1, twist_deg in (-180, 180)
///   wheel          k >= 3
///   halin          n >= 4 (target vertex count), seed
///   stacked        n >= 3, seed, forward
///   nested_rotated twist_deg, inner_radius (default 0.25; at 0.4 the
///                  quadrilateral faces turn reflex beyond ~18.4 degrees)
/// Weighted families draw weights log-uniformly from [0.1, 10] with
/// bary::Rng seeded by `seed`, visiting edges in ascending canonical order.
struct GeneratorSpec {
    Family family = Family::Prism;
    int k = 3;
    double inner_radius = 0.25;
    double twist_deg = 0.0;
    int n = 10;
    std::uint64_t seed = 1;
    bool forward = true;  // stacked: redraw with random weights
};

/// Outer polygons are regular, circumradius 1, first corner at 90 degrees.
/// Forward-drawn families carry their weights in the document.
DrawingDocument generate(const GeneratorSpec& spec);

}  // namespace bary
