#pragma once

#include <span>
#include <vector>

#include "ngon/numerics.hpp"

namespace ngon {

/// Shoelace area; positive for counter-clockwise vertex order.
double signed_area(std::span<const ComplexPoint> polygon);

/// Sutherland-Hodgman clip of `subject` against the convex polygon `clip`.
/// Either orientation is accepted for both inputs.
std::vector<ComplexPoint> clip_convex(std::span<const ComplexPoint> subject, std::span<const ComplexPoint> clip);

/// Area of the intersection of two convex polygons.
double convex_intersection_area(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b);

}  // namespace ngon
