#include "ngon/spiral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace ngon {

namespace {

using std::numbers::pi;

constexpr double exact_harmonic_limit = 1 << 20;

void require_index_above_one(double n, const char* what)
{
    if (!(n > 1.0) || !std::isfinite(n)) {
        throw std::domain_error(fmt::format("{}: index must be a finite value > 1, got {}", what, n));
    }
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

// Fractional part in turns of -2 (hi + lo) + extra, keeping the low bits of
// the compensated harmonic sum.
double reduced_turns(double harmonic_hi, double harmonic_lo, double extra)
{
    double r = -2.0 * harmonic_hi;
    r -= std::nearbyint(r);
    return r + (extra - 2.0 * harmonic_lo);
}

// exp(2 pi i (1/x - 2 H)) * l(x), with H supplied as a compensated pair.
ComplexPoint amplitude(const LengthFunction& f, double x, double harmonic_hi, double harmonic_lo)
{
    return f(x) * unit_turns(reduced_turns(harmonic_hi, harmonic_lo, 1.0 / x));
}

}  // namespace

double harmonic(double x)
{
    if (x >= 0.0 && x <= exact_harmonic_limit && is_integer(x)) {
        return x == 0.0 ? 0.0 : harmonic_number(static_cast<std::uint64_t>(x));
    }
    return harmonic_continued(x);
}

double theta(double n)
{
    require_index_above_one(n, "theta");
    return 2.0 * pi * (0.5 * n + 1.0 / n - 2.0 * harmonic(n));
}

ComplexPoint heading(double n)
{
    require_index_above_one(n, "heading");
    double half = 0.5 * n;
    half -= std::nearbyint(half);
    double turns = -2.0 * harmonic(n);
    turns -= std::nearbyint(turns);
    return unit_turns(half + turns + 1.0 / n);
}

std::uint64_t PhaseSequence::advance()
{
    const auto k = harmonic_.advance();
    value_ = unit_turns(reduced_turns(harmonic_.hi(), harmonic_.lo(), 1.0 / static_cast<double>(k)));
    return k;
}

VertexWalker::VertexWalker(LengthFunction f) : length_(f)
{
    phase_.advance();
    phase_.advance();
}

ComplexPoint VertexWalker::step()
{
    const auto k = phase_.advance();
    sum_ += length_(static_cast<double>(k)) * phase_.heading();
    return sum_.value();
}

void VertexWalker::advance_to(std::uint64_t n)
{
    while (index() < n) {
        step();
    }
}

ComplexPoint vertex(const LengthFunction& f, std::uint64_t n)
{
    if (n < 2) {
        throw std::domain_error("vertex: n must be >= 2");
    }
    VertexWalker walker(f);
    walker.advance_to(n);
    return walker.vertex();
}

std::vector<ComplexPoint> vertex_sequence(const LengthFunction& f, std::uint64_t n_max)
{
    if (n_max < 2) {
        throw std::domain_error("vertex_sequence: n_max must be >= 2");
    }
    std::vector<ComplexPoint> out;
    out.reserve(n_max - 1);
    VertexWalker walker(f);
    out.push_back(walker.vertex());
    while (walker.index() < n_max) {
        out.push_back(walker.step());
    }
    return out;
}

ComplexPoint q_term(const LengthFunction& f, double n)
{
    require_index_above_one(n, "q_term");
    // exp(2 pi i / n) - 1 = 2 i sin(pi / n) exp(i pi / n)
    const ComplexPoint denominator = ComplexPoint{0.0, 2.0 * std::sin(pi / n)} * unit_turns(0.5 / n);
    return f(n) * heading(n) / denominator;
}

ComplexPoint center(const LengthFunction& f, std::uint64_t n)
{
    if (n < 3) {
        throw std::domain_error("center: n must be >= 3");
    }
    return vertex(f, n) + q_term(f, static_cast<double>(n));
}

SpiralSample sample(const LengthFunction& f, std::uint64_t n)
{
    if (n < 3) {
        throw std::domain_error("sample: n must be >= 3");
    }
    const auto x = static_cast<double>(n);
    SpiralSample out;
    out.index = x;
    out.theta = theta(x);
    out.vertex = vertex(f, n);
    out.q = q_term(f, x);
    out.center = out.vertex + out.q;
    return out;
}

namespace {

PolygonGeometry build_polygon(const LengthFunction& f, std::uint64_t n, ComplexPoint shared_vertex)
{
    const auto x = static_cast<double>(n);
    PolygonGeometry poly;
    poly.n = n;
    poly.side_length = f(x);
    poly.interior_angle = pi * (x - 2.0) / x;
    poly.center = shared_vertex + q_term(f, x);
    poly.degenerate = std::abs(poly.side_length) <= 8.0 * std::numeric_limits<double>::epsilon();
    poly.vertices.reserve(n);
    const ComplexPoint radius = shared_vertex - poly.center;
    for (std::uint64_t k = 0; k < n; ++k) {
        poly.vertices.push_back(poly.center + radius * unit_turns(static_cast<double>(k) / x));
    }
    return poly;
}

}  // namespace

PolygonGeometry polygon(const LengthFunction& f, std::uint64_t n)
{
    if (n < 3) {
        throw std::domain_error("polygon: n must be >= 3");
    }
    return build_polygon(f, n, vertex(f, n));
}

std::vector<PolygonGeometry> polygons(const LengthFunction& f, std::uint64_t n_max)
{
    std::vector<PolygonGeometry> out;
    if (n_max < 3) {
        return out;
    }
    out.reserve(n_max - 2);
    VertexWalker walker(f);
    while (walker.index() < n_max) {
        const ComplexPoint v = walker.step();
        out.push_back(build_polygon(f, walker.index(), v));
    }
    return out;
}

AccelerationSettings default_series_settings()
{
    AccelerationSettings settings;
    settings.target_tolerance = 1e-12;
    settings.max_terms = 8192;
    settings.strategy = AccelerationStrategy::EulerTransform;
    settings.direct_prefix = 512;
    return settings;
}

SeriesResult interpolated_vertex(const LengthFunction& f, double n, const AccelerationSettings& settings)
{
    require_index_above_one(n, "interpolated_vertex");
    if (f.asymptotic_exponent().exponent < 0.0) {
        throw std::domain_error(
            fmt::format("interpolated_vertex: terms of {} do not approach 0; the series diverges", f.to_string()));
    }

    // term_k = (-1)^k [a(k) - exp(i pi n) a(k - 2 + n)], a(x) = l(x) exp(2 pi i (1/x - 2 H_x)).
    // Starting at k = 3 the leading sign is -1, folded into the generated amplitude.
    PhaseSequence integer_phase;
    integer_phase.advance();
    integer_phase.advance();

    double shifted_x = n + 1.0;
    CompensatedSum<double> shifted_harmonic(harmonic(shifted_x));
    bool first = true;

    double half = 0.5 * n;
    half -= std::nearbyint(half);
    const ComplexPoint branch = unit_turns(half);

    TermGenerator next = [&]() {
        const auto k = integer_phase.advance();
        if (first) {
            first = false;
        } else {
            shifted_x += 1.0;
            shifted_harmonic += 1.0 / shifted_x;
        }
        const ComplexPoint integer_part = f(static_cast<double>(k)) * integer_phase.value();
        const ComplexPoint shifted_part =
            amplitude(f, shifted_x, shifted_harmonic.hi(), shifted_harmonic.lo());
        return -(integer_part - branch * shifted_part);
    };
    return sum_alternating(next, settings);
}

}  // namespace ngon
