#include "ngon/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"

namespace ngon {

namespace {

constexpr double minimum_margin = 0.05;

bool finite(ComplexPoint z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <typename F>
void for_each_point(const Scene& scene, F&& visit)
{
    for (const auto& poly : scene.polygons) {
        for (const auto& v : poly.vertices) visit(v);
        visit(poly.center);
    }
    for (const auto& seq : scene.point_sequences) {
        for (const auto& p : seq.points) visit(p);
    }
    for (const auto& curve : scene.curves) {
        for (const auto& p : curve.points) visit(p);
    }
}

std::string xml_escape(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string px(double v) { return fmt::format("{:.7f}", v); }

std::string point_list(const ViewportMap& map, std::span<const ComplexPoint> points)
{
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = map.to_px(points[i]);
        if (i > 0) out += ' ';
        out += px(p.real());
        out += ',';
        out += px(p.imag());
    }
    return out;
}

}  // namespace

bool Scene::empty() const
{
    bool any = false;
    for_each_point(*this, [&](ComplexPoint) { any = true; });
    return !any;
}

Viewport fit_viewport(const Scene& scene, double margin)
{
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    for_each_point(scene, [&](ComplexPoint z) {
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y0 = std::min(y0, z.imag());
        y1 = std::max(y1, z.imag());
    });
    if (!(x0 <= x1)) {
        throw std::invalid_argument("fit_viewport: scene has no content");
    }
    double dx = x1 - x0;
    double dy = y1 - y0;
    const double floor = std::max({dx, dy, std::abs(x0), std::abs(y0), 1.0}) * 0.05;
    if (dx < floor) {
        x0 -= 0.5 * (floor - dx);
        dx = floor;
    }
    if (dy < floor) {
        y0 -= 0.5 * (floor - dy);
        dy = floor;
    }
    return {{x0 - margin * dx, y0 - margin * dy}, {x0 + dx + margin * dx, y0 + dy + margin * dy}};
}

ViewportMap::ViewportMap(const Viewport& viewport, double width_px) : viewport_(viewport), width_px_(width_px)
{
    const double dx = viewport.max.real() - viewport.min.real();
    const double dy = viewport.max.imag() - viewport.min.imag();
    if (!(dx > 0.0) || !(dy > 0.0) || !(width_px > 0.0)) {
        throw std::invalid_argument("ViewportMap: viewport must have positive extent");
    }
    scale_ = width_px / dx;
    height_px_ = dy * scale_;
}

ComplexPoint ViewportMap::to_px(ComplexPoint z) const
{
    return {(z.real() - viewport_.min.real()) * scale_, (viewport_.max.imag() - z.imag()) * scale_};
}

ComplexPoint ViewportMap::from_px(ComplexPoint p) const
{
    return {viewport_.min.real() + p.real() / scale_, viewport_.max.imag() - p.imag() / scale_};
}

ViewportMap scene_map(const Scene& scene)
{
    return ViewportMap(scene.viewport.value_or(fit_viewport(scene)), scene.style.width_px);
}

std::string render_svg(const Scene& scene)
{
    if (scene.empty()) {
        throw std::invalid_argument("render_svg: empty scene");
    }
    for_each_point(scene, [](ComplexPoint z) {
        if (!finite(z)) {
            throw std::invalid_argument("render_svg: non-finite coordinate in scene");
        }
    });

    const Viewport viewport = scene.viewport.value_or(fit_viewport(scene));
    if (scene.viewport) {
        const Viewport tight = fit_viewport(scene, 0.0);
        const double mx = minimum_margin * (tight.max.real() - tight.min.real());
        const double my = minimum_margin * (tight.max.imag() - tight.min.imag());
        if (viewport.min.real() > tight.min.real() - mx || viewport.max.real() < tight.max.real() + mx ||
            viewport.min.imag() > tight.min.imag() - my || viewport.max.imag() < tight.max.imag() + my) {
            throw std::invalid_argument("render_svg: viewport leaves less than a 5% margin around the content");
        }
    }
    const ViewportMap map(viewport, scene.style.width_px);
    const auto& style = scene.style;

    std::string out;
    auto it = std::back_inserter(out);
    fmt::format_to(it, "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    fmt::format_to(it,
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:ngon=\"urn:ngon-spiral\" version=\"1.1\" "
                   "width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
                   "ngon:xmin=\"{2:.17g}\" ngon:ymin=\"{3:.17g}\" ngon:xmax=\"{4:.17g}\" ngon:ymax=\"{5:.17g}\">\n",
                   px(map.width_px()), px(map.height_px()), viewport.min.real(), viewport.min.imag(),
                   viewport.max.real(), viewport.max.imag());
    if (!scene.title.empty()) {
        fmt::format_to(it, "<title>{}</title>\n", xml_escape(scene.title));
    }
    fmt::format_to(it, "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", px(map.width_px()),
                   px(map.height_px()));

    if (!scene.polygons.empty()) {
        fmt::format_to(it, "<g class=\"polygons\" fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"{}\">\n",
                       px(style.stroke_width_px));
        for (const auto& poly : scene.polygons) {
            fmt::format_to(it, "<polygon ngon:n=\"{}\" points=\"{}\"/>\n", poly.n, point_list(map, poly.vertices));
        }
        fmt::format_to(it, "</g>\n");
    }

    for (const auto& curve : scene.curves) {
        fmt::format_to(it,
                       "<{} class=\"curve\" ngon:name=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"{}\" "
                       "points=\"{}\"/>\n",
                       curve.closed ? "polygon" : "polyline", xml_escape(curve.name), px(style.stroke_width_px),
                       point_list(map, curve.points));
    }

    for (const auto& seq : scene.point_sequences) {
        if (!seq.parameters.empty() && seq.parameters.size() != seq.points.size()) {
            throw std::invalid_argument("render_svg: point parameters must match the points");
        }
        fmt::format_to(it, "<g class=\"markers\" ngon:name=\"{}\" fill=\"black\">\n", xml_escape(seq.name));
        for (std::size_t i = 0; i < seq.points.size(); ++i) {
            const auto p = map.to_px(seq.points[i]);
            fmt::format_to(it, "<circle class=\"marker\" ngon:name=\"{}\"", xml_escape(seq.name));
            if (!seq.parameters.empty()) {
                fmt::format_to(it, " ngon:n=\"{:.17g}\"", seq.parameters[i]);
            }
            fmt::format_to(it, " cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", px(p.real()), px(p.imag()),
                           px(style.marker_radius_px));
        }
        fmt::format_to(it, "</g>\n");
    }
    fmt::format_to(it, "</svg>\n");
    return out;
}

std::vector<ComplexPoint> sample_curve_adaptive(const ParametricCurve& curve, double lo, double hi,
                                                double px_per_unit, double tolerance_px,
                                                std::size_t initial_intervals)
{
    if (!(hi > lo) || !(px_per_unit > 0.0) || !(tolerance_px > 0.0) || initial_intervals == 0) {
        throw std::invalid_argument("sample_curve_adaptive: invalid range or resolution");
    }
    const double tolerance = tolerance_px / px_per_unit;
    constexpr int max_depth = 24;

    std::vector<ComplexPoint> out;
    const auto refine = [&](auto&& self, double t0, ComplexPoint p0, double t1, ComplexPoint p1, int depth) -> void {
        const double tm = 0.5 * (t0 + t1);
        const ComplexPoint pm = curve(tm);
        const ComplexPoint chord = p1 - p0;
        const double length = std::abs(chord);
        const double deviation = length > 0.0
                                     ? std::abs((pm - p0).real() * chord.imag() - (pm - p0).imag() * chord.real()) / length
                                     : std::abs(pm - p0);
        if (depth < max_depth && deviation > tolerance) {
            self(self, t0, p0, tm, pm, depth + 1);
            self(self, tm, pm, t1, p1, depth + 1);
        } else {
            out.push_back(p1);
        }
    };

    double t_prev = lo;
    ComplexPoint p_prev = curve(lo);
    out.push_back(p_prev);
    for (std::size_t i = 1; i <= initial_intervals; ++i) {
        const double t = i == initial_intervals
                             ? hi
                             : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(initial_intervals);
        const ComplexPoint p = curve(t);
        refine(refine, t_prev, p_prev, t, p, 0);
        t_prev = t;
        p_prev = p;
    }
    return out;
}

namespace {

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_record(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) {
        throw std::invalid_argument("parse_table: unterminated quoted field");
    }
    return fields;
}

double parse_number(const std::string& text)
{
    double value = 0.0;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(fmt::format("parse_table: bad number '{}'", text));
    }
    return value;
}

}  // namespace

std::string export_table(std::span<const TableRow> rows, TableFormat format)
{
    if (format == TableFormat::Json) {
        auto array = nlohmann::json::array();
        for (const auto& row : rows) {
            array.push_back({{"name", row.name}, {"n", row.n}, {"re", row.point.real()}, {"im", row.point.imag()}});
        }
        return array.dump() + "\n";
    }
    std::string out = "name,n,re,im\n";
    auto it = std::back_inserter(out);
    for (const auto& row : rows) {
        fmt::format_to(it, "{},{:.17g},{:.17g},{:.17g}\n", csv_field(row.name), row.n, row.point.real(),
                       row.point.imag());
    }
    return out;
}

std::vector<TableRow> parse_table(std::string_view text, TableFormat format)
{
    std::vector<TableRow> rows;
    if (format == TableFormat::Json) {
        const auto array = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
        if (array.is_discarded() || !array.is_array()) {
            throw std::invalid_argument("parse_table: expected a JSON array");
        }
        for (const auto& item : array) {
            try {
                rows.push_back({item.at("name").get<std::string>(), item.at("n").get<double>(),
                                {item.at("re").get<double>(), item.at("im").get<double>()}});
            } catch (const nlohmann::json::exception& e) {
                throw std::invalid_argument(fmt::format("parse_table: {}", e.what()));
            }
        }
        return rows;
    }

    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (header) {
            if (line != "name,n,re,im") {
                throw std::invalid_argument("parse_table: missing CSV header");
            }
            header = false;
            continue;
        }
        const auto fields = split_csv_record(line);
        if (fields.size() != 4) {
            throw std::invalid_argument(fmt::format("parse_table: expected 4 fields in '{}'", line));
        }
        rows.push_back({fields[0], parse_number(fields[1]), {parse_number(fields[2]), parse_number(fields[3])}});
    }
    return rows;
}

}  // namespace ngon
