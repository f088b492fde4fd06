#include "ngon/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "ngon/spiral.hpp"

namespace ngon {

namespace {

using std::numbers::pi;

// sum_{k>=3} length(k) exp(i theta_k) as the alternating series
// sum_m (-1)^m b_m with b_m = -length(3+m) f(3+m).
SeriesResult sum_vertex_series(const std::function<double(double)>& length, const AccelerationSettings& settings)
{
    PhaseSequence phase;
    phase.advance();
    phase.advance();
    TermGenerator next = [&]() {
        const auto k = static_cast<double>(phase.advance());
        return -length(k) * phase.value();
    };
    return sum_alternating(next, settings);
}

}  // namespace

std::string_view class_name(const ConvergenceClass& c)
{
    struct Visitor {
        std::string_view operator()(const PointLimit&) const { return "Point"; }
        std::string_view operator()(const CircularOrbit&) const { return "CircularOrbit"; }
        std::string_view operator()(const Divergent&) const { return "Divergent"; }
    };
    return std::visit(Visitor{}, c);
}

AccelerationSettings default_limit_settings()
{
    AccelerationSettings settings;
    settings.target_tolerance = 1e-14;
    settings.max_terms = 8192;
    settings.strategy = AccelerationStrategy::EulerTransform;
    settings.direct_prefix = 1024;
    return settings;
}

SeriesResult series_limit(const LengthFunction& f, const AccelerationSettings& settings)
{
    return sum_vertex_series([&f](double k) { return f(k); }, settings);
}

SeriesResult limit_point(double s, const AccelerationSettings& settings)
{
    if (!(s > 0.0)) {
        throw std::domain_error(fmt::format("limit_point: s must be positive, got {}", s));
    }
    return series_limit(LengthFunction::power_law(s), settings);
}

ConvergenceClass classify(const LengthFunction& f, const AccelerationSettings& settings)
{
    const auto asymptotics = f.asymptotic_exponent();
    if (asymptotics.exponent < 0.0) {
        return Divergent{fmt::format("terms of {} do not approach 0 (l(n) ~ c n^{})", f.to_string(),
                                     -asymptotics.exponent)};
    }
    if (asymptotics.exponent > 0.0) {
        const auto sum = series_limit(f, settings);
        return PointLimit{sum.value, sum.error_estimate, sum.converged};
    }

    // l = c + o(1): the vertices follow c times the unit-length orbit, shifted
    // by the absolutely convergent remainder sum of (l(k) - c) exp(i theta_k).
    const double c = asymptotics.leading_coefficient;
    const auto unit_orbit = orbit_center(settings);
    const auto remainder = sum_vertex_series([&f, c](double k) { return f(k) - c; }, settings);
    CircularOrbit orbit;
    orbit.center = c * unit_orbit.center + remainder.value;
    orbit.radius = std::abs(c) * power_law_orbit_radius;
    orbit.center_error_estimate = std::abs(c) * unit_orbit.richardson_spread + remainder.error_estimate;
    orbit.converged = unit_orbit.converged && remainder.converged;
    return orbit;
}

PairedSeriesTerm paired_term(std::uint64_t j, double s)
{
    if (j < 2) {
        throw std::domain_error("paired_term: j must be >= 2");
    }
    if (!(s >= 0.0)) {
        throw std::domain_error("paired_term: s must be non-negative");
    }
    const double even = 2.0 * static_cast<double>(j);
    const double odd = even - 1.0;
    const ComplexPoint f_even = heading(even);   // (+1) f(2j)
    const ComplexPoint f_odd = -heading(odd);    // (-1)^(2j-1) exp(i theta) = f(2j-1)
    return {j, f_even * std::pow(even, -s) - f_odd * std::pow(odd, -s)};
}

PairedSeries::PairedSeries(double s) : s_(s)
{
    if (!(s >= 0.0)) {
        throw std::domain_error("PairedSeries: s must be non-negative");
    }
    phase_.advance();
    phase_.advance();
}

PairedSeriesTerm PairedSeries::next()
{
    ++j_;
    const auto odd = static_cast<double>(phase_.advance());
    const ComplexPoint f_odd = phase_.value();
    const auto even = static_cast<double>(phase_.advance());
    const ComplexPoint f_even = phase_.value();
    return {j_, f_even * std::pow(even, -s_) - f_odd * std::pow(odd, -s_)};
}

double bound_A(std::uint64_t j, double s)
{
    if (j < 2) {
        throw std::domain_error("bound_A: j must be >= 2");
    }
    const double two_j = 2.0 * static_cast<double>(j);
    // 1 - (1 - 1/(2j))^s without cancellation
    return -(two_j - 1.0) * std::expm1(s * std::log1p(-1.0 / two_j));
}

double bound_B(std::uint64_t j)
{
    if (j < 2) {
        throw std::domain_error("bound_B: j must be >= 2");
    }
    const double two_j = 2.0 * static_cast<double>(j);
    const double x = pi * (1.0 / (two_j - 1.0) + 1.0 / two_j);
    return 2.0 * (two_j - 1.0) * std::sin(x);
}

double paired_absolute_bound(double s)
{
    return (4.0 * pi + s) * std::pow(2.0, -1.0 - s) * hurwitz_zeta(1.0 + s, 1.5);
}

OrbitCenterEstimate orbit_center(const AccelerationSettings& settings)
{
    OrbitCenterEstimate out;
    out.s_values = {1e-6, 1e-7, 1e-8};
    out.converged = true;
    for (std::size_t i = 0; i < out.s_values.size(); ++i) {
        const auto w = limit_point(out.s_values[i], settings);
        out.samples[i] = w.value;
        out.converged = out.converged && w.converged;
    }

    const auto& s = out.s_values;
    const auto& w = out.samples;
    // Lagrange interpolation evaluated at s = 0
    const ComplexPoint l0 = w[0] * (s[1] * s[2]) / ((s[0] - s[1]) * (s[0] - s[2]));
    const ComplexPoint l1 = w[1] * (s[0] * s[2]) / ((s[1] - s[0]) * (s[1] - s[2]));
    const ComplexPoint l2 = w[2] * (s[0] * s[1]) / ((s[2] - s[0]) * (s[2] - s[1]));
    out.center = l0 + l1 + l2;

    const auto linear = [](double sa, ComplexPoint wa, double sb, ComplexPoint wb) {
        return wb - sb * (wa - wb) / (sa - sb);
    };
    out.richardson_spread = std::abs(linear(s[0], w[0], s[1], w[1]) - linear(s[1], w[1], s[2], w[2]));
    return out;
}

OrbitDistance orbit_distance_law(double r, std::uint64_t n)
{
    if (!(r >= 1.0) || n == 0) {
        throw std::domain_error("orbit_distance_law: need r >= 1 and n >= 1");
    }
    const double scaled = r * static_cast<double>(n);
    const double rounded = std::nearbyint(scaled);
    if (std::abs(scaled - rounded) > 1e-9 * scaled) {
        throw std::domain_error(fmt::format("orbit_distance_law: n r = {} is not an integer", scaled));
    }
    const auto far = static_cast<std::uint64_t>(rounded);

    VertexWalker walker(LengthFunction::power_law(0.0));
    walker.advance_to(2 * n);
    const ComplexPoint near_point = walker.vertex();
    walker.advance_to(2 * far);
    const ComplexPoint far_point = walker.vertex();
    return {std::abs(far_point - near_point), std::abs(std::sin(2.0 * pi * std::log(r)))};
}

std::vector<CurvePoint> convergence_curve(double s_min, double s_max, std::size_t samples,
                                          const AccelerationSettings& settings)
{
    if (samples == 0) {
        throw std::invalid_argument("convergence_curve: samples must be positive");
    }
    if (!(s_min > 0.0) || (samples > 1 && !(s_min < s_max))) {
        throw std::invalid_argument("convergence_curve: need 0 < s_min < s_max");
    }

    std::vector<CurvePoint> out(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(samples - 1);
        out[i].s = i + 1 == samples && samples > 1 ? s_max : s_min * std::pow(s_max / s_min, t);
    }

    std::atomic<std::size_t> cursor{0};
    const auto worker = [&]() {
        for (std::size_t i = cursor++; i < samples; i = cursor++) {
            out[i].limit = limit_point(out[i].s, settings);
        }
    };
    const std::size_t thread_count =
        std::min<std::size_t>(samples, std::max(1u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        pool.reserve(thread_count);
        for (std::size_t t = 0; t < thread_count; ++t) {
            pool.emplace_back(worker);
        }
    }
    return out;
}

}  // namespace ngon
