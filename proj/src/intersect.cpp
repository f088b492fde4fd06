#include "ngon/intersect.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include <fmt/format.h>

namespace ngon {

namespace {

double cross(ComplexPoint a, ComplexPoint b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct SegmentHit {
    double u;  // position along the first segment, [0, 1)
    double v;  // position along the second segment, [0, 1)
};

std::optional<SegmentHit> segment_hit(ComplexPoint p0, ComplexPoint p1, ComplexPoint q0, ComplexPoint q1)
{
    const ComplexPoint d1 = p1 - p0;
    const ComplexPoint d2 = q1 - q0;
    const double denominator = cross(d1, d2);
    if (denominator == 0.0) {
        return std::nullopt;
    }
    const ComplexPoint w = q0 - p0;
    const double u = cross(w, d2) / denominator;
    const double v = cross(w, d1) / denominator;
    if (u < 0.0 || u >= 1.0 || v < 0.0 || v >= 1.0) {
        return std::nullopt;
    }
    return SegmentHit{u, v};
}

struct Candidate {
    double a_lo, a_hi;
    double b_lo, b_hi;
    SegmentHit hit;
};

class Refiner {
public:
    Refiner(const ParametricCurve& curve, double lo, double hi, const IntersectOptions& options)
        : curve_(curve), lo_(lo), hi_(hi), options_(options)
    {
    }

    std::optional<Intersection> refine(const Candidate& c) const
    {
        const double a0 = c.a_lo + c.hit.u * (c.a_hi - c.a_lo);
        const double b0 = c.b_lo + c.hit.v * (c.b_hi - c.b_lo);
        if (auto found = newton(a0, b0); found && accept(*found, c)) {
            return found;
        }
        if (auto found = bisect(c); found && accept(*found, c)) {
            return found;
        }
        return std::nullopt;
    }

private:
    Intersection make(double a, double b) const
    {
        const ComplexPoint ca = curve_(a);
        const ComplexPoint cb = curve_(b);
        return {a, b, 0.5 * (ca + cb), std::abs(ca - cb)};
    }

    bool accept(const Intersection& x, const Candidate& c) const
    {
        // stay near the crossing that produced the candidate
        const double reach = 4.0 * options_.step;
        return x.residual < options_.tolerance && x.b - x.a > options_.separation && x.a >= c.a_lo - reach &&
               x.a <= c.a_hi + reach && x.b >= c.b_lo - reach && x.b <= c.b_hi + reach;
    }

    ComplexPoint derivative(double t) const
    {
        const double h = options_.jacobian_step;
        const double left = std::max(lo_, t - h);
        const double right = std::min(hi_, t + h);
        return (curve_(right) - curve_(left)) / (right - left);
    }

    std::optional<Intersection> newton(double a, double b) const
    {
        auto residual = curve_(a) - curve_(b);
        for (int iter = 0; iter < options_.max_newton_iterations; ++iter) {
            if (std::abs(residual) < 0.25 * options_.tolerance) {
                break;
            }
            const ComplexPoint da = derivative(a);
            const ComplexPoint db = -derivative(b);
            // [Re da  Re db] [delta_a]   [-Re residual]
            // [Im da  Im db] [delta_b] = [-Im residual]
            const double det = da.real() * db.imag() - db.real() * da.imag();
            if (det == 0.0 || !std::isfinite(det)) {
                return std::nullopt;
            }
            const double delta_a = (-residual.real() * db.imag() + residual.imag() * db.real()) / det;
            const double delta_b = (-da.real() * residual.imag() + da.imag() * residual.real()) / det;

            double damping = 1.0;
            bool improved = false;
            for (int halving = 0; halving < 30; ++halving) {
                const double na = std::clamp(a + damping * delta_a, lo_, hi_);
                const double nb = std::clamp(b + damping * delta_b, lo_, hi_);
                const auto trial = curve_(na) - curve_(nb);
                if (std::abs(trial) < std::abs(residual)) {
                    a = na;
                    b = nb;
                    residual = trial;
                    improved = true;
                    break;
                }
                damping *= 0.5;
            }
            if (!improved) {
                break;
            }
        }
        if (a > b) {
            std::swap(a, b);
        }
        return make(a, b);
    }

    // Halve both parameter intervals, keeping the pair of sub-chords that still cross.
    std::optional<Intersection> bisect(Candidate c) const
    {
        for (int iter = 0; iter < 200; ++iter) {
            const double a_mid = 0.5 * (c.a_lo + c.a_hi);
            const double b_mid = 0.5 * (c.b_lo + c.b_hi);
            const std::array<std::array<double, 2>, 2> a_parts = {{{c.a_lo, a_mid}, {a_mid, c.a_hi}}};
            const std::array<std::array<double, 2>, 2> b_parts = {{{c.b_lo, b_mid}, {b_mid, c.b_hi}}};
            bool found = false;
            for (const auto& ap : a_parts) {
                for (const auto& bp : b_parts) {
                    if (auto hit = segment_hit(curve_(ap[0]), curve_(ap[1]), curve_(bp[0]), curve_(bp[1]))) {
                        c = {ap[0], ap[1], bp[0], bp[1], *hit};
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) {
                break;
            }
            const auto x = make(c.a_lo + c.hit.u * (c.a_hi - c.a_lo), c.b_lo + c.hit.v * (c.b_hi - c.b_lo));
            if (x.residual < options_.tolerance || c.a_hi - c.a_lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(c.a_hi)) {
                return x;
            }
        }
        return make(c.a_lo + c.hit.u * (c.a_hi - c.a_lo), c.b_lo + c.hit.v * (c.b_hi - c.b_lo));
    }

    const ParametricCurve& curve_;
    double lo_;
    double hi_;
    IntersectOptions options_;
};

}  // namespace

std::vector<Intersection> self_intersections(const ParametricCurve& curve, double lo, double hi,
                                             const IntersectOptions& options)
{
    if (!(hi > lo) || !(options.step > 0.0) || !(options.tolerance > 0.0)) {
        throw std::invalid_argument("self_intersections: need lo < hi, step > 0 and tolerance > 0");
    }

    const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / options.step));
    std::vector<double> params(count + 1);
    std::vector<ComplexPoint> points(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        params[i] = i == count ? hi : lo + static_cast<double>(i) * options.step;
        points[i] = curve(params[i]);
        if (!std::isfinite(points[i].real()) || !std::isfinite(points[i].imag())) {
            throw std::domain_error(fmt::format("self_intersections: curve is not finite at t = {}", params[i]));
        }
    }

    // Sweep over segments ordered by their left x extent.
    const std::size_t segments = count;
    std::vector<std::size_t> order(segments);
    for (std::size_t i = 0; i < segments; ++i) order[i] = i;
    const auto x_min = [&](std::size_t i) { return std::min(points[i].real(), points[i + 1].real()); };
    const auto x_max = [&](std::size_t i) { return std::max(points[i].real(), points[i + 1].real()); };
    const auto y_min = [&](std::size_t i) { return std::min(points[i].imag(), points[i + 1].imag()); };
    const auto y_max = [&](std::size_t i) { return std::max(points[i].imag(), points[i + 1].imag()); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x_min(a) < x_min(b) || (x_min(a) == x_min(b) && a < b);
    });

    std::vector<Candidate> candidates;
    for (std::size_t oi = 0; oi < segments; ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < segments && x_min(order[oj]) <= x_max(i); ++oj) {
            std::size_t p = i;
            std::size_t q = order[oj];
            if (p > q) std::swap(p, q);
            if (q - p < 2) continue;
            if (y_max(p) < y_min(q) || y_max(q) < y_min(p)) continue;
            if (auto hit = segment_hit(points[p], points[p + 1], points[q], points[q + 1])) {
                candidates.push_back({params[p], params[p + 1], params[q], params[q + 1], *hit});
            }
        }
    }

    const Refiner refiner(curve, lo, hi, options);
    std::vector<Intersection> found;
    for (const auto& c : candidates) {
        if (auto x = refiner.refine(c)) {
            found.push_back(*x);
        }
    }

    std::sort(found.begin(), found.end(), [](const Intersection& x, const Intersection& y) {
        return x.a < y.a || (x.a == y.a && x.b < y.b);
    });
    std::vector<Intersection> unique;
    const double merge_radius = std::max(1e-9, 1e-3 * options.step);
    for (const auto& x : found) {
        const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](const Intersection& u) {
            return std::abs(u.a - x.a) < merge_radius && std::abs(u.b - x.b) < merge_radius;
        });
        if (!duplicate) {
            unique.push_back(x);
        }
    }
    return unique;
}

}  // namespace ngon
