#pragma once

#include <functional>
#include <vector>

#include "ngon/numerics.hpp"

namespace ngon {

using ParametricCurve = std::function<ComplexPoint(double)>;

/// curve(a) == curve(b) with a < b.
struct Intersection {
    double a = 0.0;
    double b = 0.0;
    ComplexPoint point;
    double residual = 0.0;  // |curve(a) - curve(b)|
};

struct IntersectOptions {
    double step = 1e-3;        // parameter spacing of the polyline
    double tolerance = 1e-12;  // required |curve(a) - curve(b)|
    double separation = 1e-3;  // minimum b - a; nearby parameters always nearly meet
    double jacobian_step = 1e-6;
    int max_newton_iterations = 60;
};

/// Self-intersections of curve on [lo, hi]. The curve is sampled into a
/// polyline, crossings between non-adjacent segments become candidates, and
/// each candidate (a, b) is refined by damped Newton on curve(a) - curve(b) = 0
/// with a central-difference Jacobian, falling back to bisection of the two
/// crossing segments. Results are sorted by a and carry no duplicates.
/// Throws std::domain_error if the curve is non-finite at a sample.
std::vector<Intersection> self_intersections(const ParametricCurve& curve, double lo, double hi,
                                             const IntersectOptions& options = {});

}  // namespace ngon
