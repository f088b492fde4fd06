#include "ngon/polygon_clip.hpp"

#include <algorithm>
#include <cmath>

namespace ngon {

namespace {

double cross(ComplexPoint a, ComplexPoint b) { return a.real() * b.imag() - a.imag() * b.real(); }

}  // namespace

double signed_area(std::span<const ComplexPoint> polygon)
{
    if (polygon.size() < 3) {
        return 0.0;
    }
    double twice = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
    }
    return 0.5 * twice;
}

std::vector<ComplexPoint> clip_convex(std::span<const ComplexPoint> subject, std::span<const ComplexPoint> clip)
{
    std::vector<ComplexPoint> output(subject.begin(), subject.end());
    if (clip.size() < 3) {
        return {};
    }
    std::vector<ComplexPoint> edges(clip.begin(), clip.end());
    if (signed_area(edges) < 0.0) {
        std::reverse(edges.begin(), edges.end());
    }

    for (std::size_t e = 0; e < edges.size() && !output.empty(); ++e) {
        const ComplexPoint a = edges[e];
        const ComplexPoint b = edges[(e + 1) % edges.size()];
        const ComplexPoint direction = b - a;
        const auto side = [&](ComplexPoint p) { return cross(direction, p - a); };

        std::vector<ComplexPoint> input;
        input.swap(output);
        for (std::size_t i = 0; i < input.size(); ++i) {
            const ComplexPoint current = input[i];
            const ComplexPoint previous = input[(i + input.size() - 1) % input.size()];
            const double s_cur = side(current);
            const double s_prev = side(previous);
            if (s_cur >= 0.0) {
                if (s_prev < 0.0) {
                    output.push_back(previous + (current - previous) * (s_prev / (s_prev - s_cur)));
                }
                output.push_back(current);
            } else if (s_prev >= 0.0) {
                output.push_back(previous + (current - previous) * (s_prev / (s_prev - s_cur)));
            }
        }
    }
    return output;
}

double convex_intersection_area(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b)
{
    return std::abs(signed_area(clip_convex(a, b)));
}

}  // namespace ngon
