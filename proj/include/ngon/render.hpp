#pragma once

// SVG figures and CSV/JSON point tables. Output is a pure function of the
// input: identical scenes produce byte-identical documents.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngon/intersect.hpp"
#include "ngon/numerics.hpp"
#include "ngon/spiral.hpp"

namespace ngon {

struct Viewport {
    ComplexPoint min;  // lower-left corner
    ComplexPoint max;  // upper-right corner
};

struct Style {
    double width_px = 800.0;
    double stroke_width_px = 1.0;
    double marker_radius_px = 2.5;
};

struct NamedPoints {
    std::string name;
    std::vector<ComplexPoint> points;
    /// Optional parameter per point (e.g. the polygon index n); empty or same size as points.
    std::vector<double> parameters;
};

struct NamedCurve {
    std::string name;
    std::vector<ComplexPoint> points;
    bool closed = false;
};

struct Scene {
    std::string title;
    std::vector<PolygonGeometry> polygons;
    std::vector<NamedPoints> point_sequences;
    std::vector<NamedCurve> curves;
    /// Computed by fit_viewport when absent.
    std::optional<Viewport> viewport;
    Style style;

    bool empty() const;
};

/// Smallest box around the scene content, padded by `margin` of its extent
/// on every side. Degenerate extents are widened so the box has positive area.
Viewport fit_viewport(const Scene& scene, double margin = 0.06);

/// Uniform-scale affine map from the complex plane to SVG pixels with the
/// imaginary axis pointing up.
class ViewportMap {
public:
    ViewportMap(const Viewport& viewport, double width_px);

    ComplexPoint to_px(ComplexPoint z) const;
    ComplexPoint from_px(ComplexPoint px) const;
    double width_px() const { return width_px_; }
    double height_px() const { return height_px_; }
    double px_per_unit() const { return scale_; }

private:
    Viewport viewport_;
    double width_px_;
    double height_px_;
    double scale_;
};

/// Map used by render_svg for this scene.
ViewportMap scene_map(const Scene& scene);

/// SVG 1.1 document. Markers are <circle> elements carrying ngon:name and
/// ngon:n attributes so their coordinates can be audited. Throws
/// std::invalid_argument for an empty scene, non-finite coordinates, or a
/// supplied viewport that leaves less than a 5% margin.
std::string render_svg(const Scene& scene);

/// Samples curve on [lo, hi], subdividing every parameter interval until the
/// curve's midpoint lies within tolerance_px of the chord at px_per_unit.
std::vector<ComplexPoint> sample_curve_adaptive(const ParametricCurve& curve, double lo, double hi,
                                                double px_per_unit, double tolerance_px = 0.2,
                                                std::size_t initial_intervals = 64);

struct TableRow {
    std::string name;
    double n = 0.0;
    ComplexPoint point;

    bool operator==(const TableRow&) const = default;
};

enum class TableFormat { Csv, Json };

/// CSV has the header "name,n,re,im" and 17 significant digits per number;
/// JSON is an array of {"name", "n", "re", "im"} objects. Both parse back to
/// bit-identical values.
std::string export_table(std::span<const TableRow> rows, TableFormat format);

/// Inverse of export_table. Throws std::invalid_argument on malformed input.
std::vector<TableRow> parse_table(std::string_view text, TableFormat format);

}  // namespace ngon
