#include "ngon/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "ngon/convergence.hpp"
#include "ngon/intersect.hpp"
#include "ngon/length_function.hpp"
#include "ngon/render.hpp"
#include "ngon/spiral.hpp"
#include "ngon/telescoping.hpp"

namespace ngon::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "csv";
    double tolerance = 1e-8;
    std::string out_path;
};

TableFormat table_format(const Common& common)
{
    return common.format == "json" ? TableFormat::Json : TableFormat::Csv;
}

AccelerationSettings limit_settings(const Common& common)
{
    auto settings = default_limit_settings();
    settings.target_tolerance = common.tolerance;
    return settings;
}

AccelerationSettings interp_settings(const Common& common)
{
    auto settings = default_series_settings();
    settings.target_tolerance = common.tolerance;
    return settings;
}

LengthFunction parse_length(const std::string& text)
{
    try {
        return LengthFunction::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
    }
    file << contents;
    if (!file) {
        throw std::runtime_error(fmt::format("failed writing '{}'", path));
    }
}

NamedPoints named(std::string name, const std::vector<TableRow>& rows)
{
    NamedPoints seq;
    seq.name = std::move(name);
    for (const auto& row : rows) {
        seq.points.push_back(row.point);
        seq.parameters.push_back(row.n);
    }
    return seq;
}

// Samples a parametric curve at roughly 0.2 px resolution for a scene whose
// remaining content determines the viewport.
NamedCurve adaptive_curve(std::string name, const Scene& scene, const ParametricCurve& curve, double lo, double hi)
{
    Scene probe = scene;
    NamedCurve coarse{name, {}, false};
    for (int i = 0; i <= 256; ++i) {
        coarse.points.push_back(curve(lo + (hi - lo) * i / 256.0));
    }
    probe.curves.push_back(coarse);
    const auto map = scene_map(probe);
    return {std::move(name), sample_curve_adaptive(curve, lo, hi, map.px_per_unit()), false};
}

struct Outcome {
    std::vector<TableRow> rows;
    bool converged = true;
};

Outcome cmd_build(const LengthFunction& f, std::uint64_t max_n, bool with_interp, const Common& common)
{
    Outcome outcome;
    const auto vertices = vertex_sequence(f, max_n);
    std::vector<TableRow> vertex_rows;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        vertex_rows.push_back({"vertices", static_cast<double>(i + 2), vertices[i]});
    }
    Scene scene;
    scene.title = fmt::format("n-gon spiral, length {}", f.to_string());
    scene.polygons = polygons(f, max_n);
    std::vector<TableRow> center_rows;
    for (const auto& poly : scene.polygons) {
        center_rows.push_back({"centers", static_cast<double>(poly.n), poly.center});
    }
    scene.point_sequences.push_back(named("vertices", vertex_rows));
    scene.point_sequences.push_back(named("centers", center_rows));

    if (with_interp && f.asymptotic_exponent().exponent >= 0.0) {
        const auto settings = interp_settings(common);
        const auto curve = [&](double n) {
            const auto r = interpolated_vertex(f, n, settings);
            outcome.converged = outcome.converged && r.converged;
            return r.value;
        };
        scene.curves.push_back(adaptive_curve("interpolant", scene, curve, 2.0, static_cast<double>(max_n)));
    }

    outcome.rows = vertex_rows;
    outcome.rows.insert(outcome.rows.end(), center_rows.begin(), center_rows.end());
    if (!common.out_path.empty()) {
        write_file(common.out_path, render_svg(scene));
    }
    return outcome;
}

Outcome cmd_limit(double s, const std::string& strategy, const Common& common)
{
    if (!(s > 0.0)) {
        throw UsageError("--s must be positive");
    }
    auto settings = limit_settings(common);
    if (strategy == "paired") {
        settings.strategy = AccelerationStrategy::PairedTerms;
        settings.direct_prefix = 0;
        settings.max_terms = 1u << 26;
    } else if (strategy == "direct") {
        settings.strategy = AccelerationStrategy::DirectPartialSums;
        settings.direct_prefix = 0;
        settings.max_terms = 1u << 26;
    }
    const auto result = limit_point(s, settings);
    return {{{"limit", s, result.value}, {"limit_error_estimate", s, {result.error_estimate, 0.0}}},
            result.converged};
}

Outcome cmd_classify(const LengthFunction& f, const Common& common, std::ostream& out)
{
    const auto c = classify(f, limit_settings(common));
    out << class_name(c) << '\n';
    Outcome outcome;
    if (const auto* p = std::get_if<PointLimit>(&c)) {
        outcome.rows.push_back({"limit", f.asymptotic_exponent().exponent, p->value});
        outcome.converged = p->converged;
    } else if (const auto* o = std::get_if<CircularOrbit>(&c)) {
        outcome.rows.push_back({"orbit_center", 0.0, o->center});
        outcome.rows.push_back({"orbit_radius", 0.0, {o->radius, 0.0}});
        outcome.converged = o->converged;
    } else if (const auto* d = std::get_if<Divergent>(&c)) {
        out << "# " << d->reason << '\n';
    }
    return outcome;
}

Outcome cmd_orbit(std::uint64_t max_n, std::uint64_t points, std::uint64_t probe, const Common& common)
{
    const auto estimate = orbit_center(limit_settings(common));
    Outcome outcome;
    outcome.converged = estimate.converged;
    outcome.rows.push_back({"orbit_center", 0.0, estimate.center});
    for (std::size_t i = 0; i < estimate.samples.size(); ++i) {
        outcome.rows.push_back({"limit", estimate.s_values[i], estimate.samples[i]});
    }
    outcome.rows.push_back({"orbit_radius", 0.0, {power_law_orbit_radius, 0.0}});

    const auto f = LengthFunction::power_law(0.0);
    VertexWalker walker(f);
    walker.advance_to(2 * probe);
    const auto even = walker.vertex();
    const auto odd = walker.step();
    outcome.rows.push_back({"radius_probe", static_cast<double>(2 * probe), {std::abs(even - estimate.center), 0.0}});
    outcome.rows.push_back({"radius_probe", static_cast<double>(2 * probe + 1), {std::abs(odd - estimate.center), 0.0}});

    if (!common.out_path.empty()) {
        Scene scene;
        scene.title = "power:0 spiral and its limiting orbit";
        scene.polygons = polygons(f, max_n);
        const auto vertices = vertex_sequence(f, points);
        std::vector<TableRow> vertex_rows;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            vertex_rows.push_back({"vertices", static_cast<double>(i + 2), vertices[i]});
        }
        scene.point_sequences.push_back(named("vertices", vertex_rows));
        scene.point_sequences.push_back(named("orbit_center", {{"orbit_center", 0.0, estimate.center}}));
        NamedCurve circle{"orbit", {}, true};
        for (int i = 0; i < 720; ++i) {
            circle.points.push_back(estimate.center + power_law_orbit_radius * unit_turns(i / 720.0));
        }
        scene.curves.push_back(circle);
        const auto settings = interp_settings(common);
        const auto curve = [&](double n) {
            const auto r = interpolated_vertex(f, n, settings);
            outcome.converged = outcome.converged && r.converged;
            return r.value;
        };
        scene.curves.push_back(adaptive_curve("interpolant", scene, curve, 2.0, static_cast<double>(max_n)));
        write_file(common.out_path, render_svg(scene));
    }
    return outcome;
}

Outcome cmd_curve(double s_min, double s_max, std::size_t samples, const Common& common)
{
    if (!(s_min > 0.0) || (samples > 1 && !(s_min < s_max)) || samples == 0) {
        throw UsageError("need 0 < --s-min < --s-max and --samples >= 1");
    }
    const auto curve = convergence_curve(s_min, s_max, samples, limit_settings(common));
    Outcome outcome;
    for (const auto& point : curve) {
        outcome.rows.push_back({"W", point.s, point.limit.value});
        outcome.converged = outcome.converged && point.limit.converged;
    }
    if (!common.out_path.empty()) {
        Scene scene;
        scene.title = fmt::format("limit points W(s), s in [{}, {}]", s_min, s_max);
        NamedCurve path{"W", {}, false};
        for (const auto& row : outcome.rows) path.points.push_back(row.point);
        scene.curves.push_back(path);
        scene.point_sequences.push_back(named("W", outcome.rows));
        write_file(common.out_path, render_svg(scene));
    }
    return outcome;
}

struct Check {
    std::string name;
    double value;
    double threshold;
    bool pass() const { return value < threshold; }
};

std::vector<Check> telescoping_checks(std::uint64_t n_max, double closed_form_tolerance)
{
    using namespace telescoping;
    std::vector<Check> checks;
    const auto identity = verify_telescoping_identity(n_max);
    checks.push_back({"identity_residual", identity.max_residual(), closed_form_tolerance});

    double circle = 0.0;
    constexpr int circle_samples = 10000;
    for (int i = 1; i <= circle_samples; ++i) {
        const double n = 1.01 + (100.0 - 1.01) * i / circle_samples;
        circle = std::max(circle, std::abs(std::abs(vertex_closed(n) + 1.0) - 1.0));
    }
    checks.push_back({"unit_circle", circle, 1e-12});

    double q_match = 0.0;
    const auto length = LengthFunction::telescoping();
    for (std::uint64_t m = 3; m <= n_max; ++m) {
        const auto x = static_cast<double>(m);
        q_match = std::max(q_match, std::abs(q_closed(x) - q_term(length, x)));
    }
    checks.push_back({"q_closed_vs_q_term", q_match, 1e-11});

    checks.push_back({"length_zeros",
                      std::max(std::abs(length(Constants::zero_low)), std::abs(length(Constants::zero_high))), 1e-14});
    const double phi = Constants::phi;
    checks.push_back({"golden_self_intersection", std::abs(center_closed(phi) - center_closed(phi + 1.0)),
                      closed_form_tolerance});
    checks.push_back({"golden_printed_point", std::abs(center_closed(phi) - golden_intersection_point(phi)),
                      closed_form_tolerance});
    checks.push_back({"q_limit_at_one", std::abs(q_real_limit_at_one().extrapolated - Constants::q_limit_at_1), 1e-3});
    return checks;
}

Outcome cmd_telescope(bool check, std::uint64_t n_max, std::uint64_t max_n, const std::string& q_out,
                      const Common& common, std::ostream& err)
{
    using namespace telescoping;
    Outcome outcome;
    const auto length = LengthFunction::telescoping();

    std::vector<TableRow> vertex_rows;
    std::vector<TableRow> center_rows;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const auto x = static_cast<double>(n);
        vertex_rows.push_back({"vertices", x, vertex_closed(x)});
        if (n >= 3) center_rows.push_back({"centers", x, center_closed(x)});
    }
    outcome.rows = vertex_rows;
    outcome.rows.insert(outcome.rows.end(), center_rows.begin(), center_rows.end());

    if (check) {
        for (const auto& c : telescoping_checks(n_max, common.tolerance)) {
            fmt::print(err, "{} {}: {:.3e} (threshold {:.1e})\n", c.pass() ? "PASS" : "FAIL", c.name, c.value,
                       c.threshold);
            outcome.rows.push_back({"check:" + c.name, c.threshold, {c.value, 0.0}});
            outcome.converged = outcome.converged && c.pass();
        }
    }

    if (!common.out_path.empty()) {
        Scene scene;
        scene.title = "telescoping spiral";
        scene.polygons = polygons(length, max_n);
        scene.point_sequences.push_back(named("vertices", vertex_rows));
        scene.point_sequences.push_back(named("centers", center_rows));
        NamedCurve circle{"unit_circle", {}, true};
        for (int i = 0; i < 720; ++i) circle.points.push_back(-1.0 + unit_turns(i / 720.0));
        scene.curves.push_back(circle);
        scene.curves.push_back(adaptive_curve("center_curve", scene, center_closed, 1.05, static_cast<double>(max_n)));
        write_file(common.out_path, render_svg(scene));
    }
    if (!q_out.empty()) {
        Scene scene;
        scene.title = "Q_L continuation";
        scene.point_sequences.push_back(named("q", {{"q", 4.0 / 3.0, q_closed(4.0 / 3.0)}, {"q", 4.0, q_closed(4.0)}}));
        // span of the spiral is set by its far end; the near-1 tail is clipped by range choice
        scene.curves.push_back(adaptive_curve("q_curve", scene, q_closed, 1.02, 35.0));
        write_file(q_out, render_svg(scene));
    }
    return outcome;
}

Outcome cmd_intersect(const std::string& which, double lo, double hi, double step, double tol)
{
    ParametricCurve curve;
    if (which == "centers") {
        curve = telescoping::center_closed;
    } else if (which == "q") {
        curve = telescoping::q_closed;
    } else {
        throw UsageError("--curve must be 'centers' or 'q'");
    }
    if (!(lo > 1.0) || !(hi > lo)) {
        throw UsageError("need 1 < --lo < --hi");
    }
    IntersectOptions options;
    options.step = step;
    options.tolerance = tol;
    Outcome outcome;
    for (const auto& x : self_intersections(curve, lo, hi, options)) {
        outcome.rows.push_back({"intersection_a", x.a, x.point});
        outcome.rows.push_back({"intersection_b", x.b, x.point});
    }
    return outcome;
}

Outcome cmd_interp(const LengthFunction& f, double n, const Common& common)
{
    if (!(n > 1.0)) {
        throw UsageError("--n must exceed 1");
    }
    if (f.asymptotic_exponent().exponent < 0.0) {
        throw UsageError(fmt::format("{} is divergent; the interpolant does not exist", f.to_string()));
    }
    const auto r = interpolated_vertex(f, n, interp_settings(common));
    return {{{"interp", n, r.value}, {"interp_error_estimate", n, {r.error_estimate, 0.0}}}, r.converged};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Regular n-gon spiral: construction, limits, continuation and figures", "spiral"};
    app.require_subcommand(1);

    Common common;
    const auto add_common = [&](CLI::App* sub, bool with_out) {
        sub->add_option("--format", common.format, "Table format on stdout")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--tol", common.tolerance, "Target tolerance")->check(CLI::PositiveNumber);
        if (with_out) sub->add_option("--out", common.out_path, "SVG output path");
    };

    std::string length_text;
    std::uint64_t max_n = 9;
    bool no_interp = false;
    auto* build = app.add_subcommand("build", "Construct polygons, vertices and centers");
    build->add_option("--length", length_text, "power:S | inscribed:S | circumscribed:S | area:S | telescoping")
        ->required();
    build->add_option("--max-n", max_n, "Largest polygon")->check(CLI::Range(3, 100000));
    build->add_flag("--no-interp", no_interp, "Skip the interpolation curve");
    add_common(build, true);

    double s = 1.0;
    std::string strategy = "euler";
    auto* limit = app.add_subcommand("limit", "Limit point W(s) of the power-law spiral");
    limit->add_option("--s", s, "Exponent s > 0")->required();
    limit->add_option("--strategy", strategy)->check(CLI::IsMember({"euler", "paired", "direct"}));
    add_common(limit, false);

    auto* classify_cmd = app.add_subcommand("classify", "Classify the limit behaviour");
    classify_cmd->add_option("--length", length_text)->required();
    add_common(classify_cmd, false);

    std::uint64_t orbit_max_n = 12;
    std::uint64_t orbit_points = 400;
    std::uint64_t probe = 500000;
    auto* orbit = app.add_subcommand("orbit", "Center and radius of the s = 0 orbit");
    orbit->add_option("--max-n", orbit_max_n, "Largest polygon drawn")->check(CLI::Range(3, 10000));
    orbit->add_option("--points", orbit_points, "Vertices drawn")->check(CLI::Range(3, 1000000));
    orbit->add_option("--probe", probe, "Radius probed at vertices 2*probe and 2*probe+1")
        ->check(CLI::Range(2, 50000000));
    add_common(orbit, true);

    double s_min = 0.0000726;
    double s_max = 1.77;
    std::size_t samples = 64;
    auto* curve = app.add_subcommand("curve", "Trace W(s) over a range of s");
    curve->add_option("--s-min", s_min);
    curve->add_option("--s-max", s_max);
    curve->add_option("--samples", samples)->check(CLI::Range(1, 100000));
    add_common(curve, true);

    bool check = false;
    std::uint64_t n_max = 2000;
    std::uint64_t tele_max_n = 12;
    std::string q_out;
    auto* telescope = app.add_subcommand("telescope", "Telescoping spiral closed forms and checks");
    telescope->add_flag("--check", check, "Verify the closed-form invariants");
    telescope->add_option("--n-max", n_max, "Largest n for identity checks")->check(CLI::Range(3, 1000000));
    telescope->add_option("--max-n", tele_max_n, "Largest polygon drawn")->check(CLI::Range(3, 10000));
    telescope->add_option("--q-out", q_out, "SVG output path for the Q curve");
    add_common(telescope, true);

    std::string which = "centers";
    double lo = 1.05;
    double hi = 6.0;
    double step = 1e-3;
    double intersect_tol = 1e-12;
    auto* intersect = app.add_subcommand("intersect", "Self-intersections of the telescoping curves");
    intersect->add_option("--curve", which)->check(CLI::IsMember({"centers", "q"}));
    intersect->add_option("--lo", lo);
    intersect->add_option("--hi", hi);
    intersect->add_option("--step", step)->check(CLI::PositiveNumber);
    intersect->add_option("--tol", intersect_tol)->check(CLI::PositiveNumber);
    intersect->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

    double interp_n = 2.5;
    auto* interp = app.add_subcommand("interp", "Smooth continuation of the vertex sequence");
    interp->add_option("--length", length_text)->required();
    interp->add_option("--n", interp_n)->required();
    add_common(interp, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }

    try {
        Outcome outcome;
        if (build->parsed()) {
            outcome = cmd_build(parse_length(length_text), max_n, !no_interp, common);
        } else if (limit->parsed()) {
            outcome = cmd_limit(s, strategy, common);
        } else if (classify_cmd->parsed()) {
            outcome = cmd_classify(parse_length(length_text), common, out);
        } else if (orbit->parsed()) {
            outcome = cmd_orbit(orbit_max_n, orbit_points, probe, common);
        } else if (curve->parsed()) {
            outcome = cmd_curve(s_min, s_max, samples, common);
        } else if (telescope->parsed()) {
            if (telescope->count("--tol") == 0) common.tolerance = 1e-10;
            outcome = cmd_telescope(check, n_max, tele_max_n, q_out, common, err);
        } else if (intersect->parsed()) {
            outcome = cmd_intersect(which, lo, hi, step, intersect_tol);
        } else if (interp->parsed()) {
            outcome = cmd_interp(parse_length(length_text), interp_n, common);
        }
        out << export_table(outcome.rows, table_format(common));
        if (!outcome.converged) {
            err << "error: numerical result did not reach the requested tolerance\n";
            return not_converged;
        }
        return success;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ngon::cli
