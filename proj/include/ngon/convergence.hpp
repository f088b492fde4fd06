#pragma once

// Limit behaviour of the vertex sequence V(n) as n -> infinity.
//
// For the power law l(n) = n^-s the limit W(s) exists for s > 0, the vertices
// settle onto a circle of diameter 1 for s = 0, and they diverge for s < 0.
// Catalog lengths are classified through their leading power-law exponent.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ngon/length_function.hpp"
#include "ngon/numerics.hpp"
#include "ngon/spiral.hpp"

namespace ngon {

struct PointLimit {
    ComplexPoint value;
    double error_estimate = 0.0;
    bool converged = false;
};

struct CircularOrbit {
    ComplexPoint center;
    double radius = 0.0;
    /// Spread of the estimates that produced the center.
    double center_error_estimate = 0.0;
    bool converged = false;
};

struct Divergent {
    std::string reason;
};

using ConvergenceClass = std::variant<PointLimit, CircularOrbit, Divergent>;

/// "Point", "CircularOrbit" or "Divergent".
std::string_view class_name(const ConvergenceClass& c);

/// Radius of the s = 0 orbit (the circle has diameter 1).
inline constexpr double power_law_orbit_radius = 0.5;

/// Default settings for W(s) and related limits.
AccelerationSettings default_limit_settings();

/// sum_{k>=3} l(k) exp(i theta_k), summed as an alternating series. Also
/// meaningful (Euler-summed) for bounded non-vanishing terms.
SeriesResult series_limit(const LengthFunction& f, const AccelerationSettings& settings = default_limit_settings());

/// W(s) = sum_{k>=3} (-1)^k exp(2 pi i (1/k - 2 H_k)) / k^s for s > 0.
SeriesResult limit_point(double s, const AccelerationSettings& settings = default_limit_settings());

/// Classification from the leading exponent s' of l:
///   s' > 0  -> Point at the summed limit,
///   s' = 0  -> CircularOrbit of radius |c|/2 where l -> c,
///   s' < 0  -> Divergent (terms do not approach 0).
ConvergenceClass classify(const LengthFunction& f, const AccelerationSettings& settings = default_limit_settings());

/// F(j) = f(2j) / (2j)^s - f(2j-1) / (2j-1)^s: one pair of consecutive terms of V.
struct PairedSeriesTerm {
    std::uint64_t j = 0;
    ComplexPoint value;
};

PairedSeriesTerm paired_term(std::uint64_t j, double s);

/// F(2), F(3), ... generated in O(1) per term. Partial sums reproduce V(2n).
class PairedSeries {
public:
    explicit PairedSeries(double s);
    PairedSeriesTerm next();

private:
    double s_;
    std::uint64_t j_ = 1;
    PhaseSequence phase_;
};

/// A(j, s) = (2j - 1)(1 - (1 - 1/(2j))^s), which lies in (0, s) for s in (0, 1].
double bound_A(std::uint64_t j, double s);

/// B(j) = 2 (2j - 1) sin(pi (1/(2j-1) + 1/(2j))), increasing towards 4 pi.
double bound_B(std::uint64_t j);

/// (4 pi + s) 2^(-1-s) zeta(1 + s, 3/2), an upper bound on sum_j |F(j)|.
double paired_absolute_bound(double s);

struct OrbitCenterEstimate {
    ComplexPoint center;
    /// W(s) at the three sample exponents.
    std::array<double, 3> s_values{};
    std::array<ComplexPoint, 3> samples{};
    /// Distance between the two linear extrapolants built from adjacent pairs.
    double richardson_spread = 0.0;
    bool converged = false;
};

/// lim_{s->0+} W(s): W evaluated at s = 1e-6, 1e-7, 1e-8 and extrapolated to
/// s = 0 with a quadratic through the three samples.
OrbitCenterEstimate orbit_center(const AccelerationSettings& settings = default_limit_settings());

struct OrbitDistance {
    double empirical = 0.0;
    double predicted = 0.0;
};

/// Compares |U(n r) - U(n)| against |sin(2 pi ln r)|, where U(m) is the s = 0
/// vertex V(2m). Requires r >= 1, n >= 1 and n r integral.
OrbitDistance orbit_distance_law(double r, std::uint64_t n);

struct CurvePoint {
    double s = 0.0;
    SeriesResult limit;
};

/// W(s) on a geometric grid from s_min to s_max. Samples are evaluated
/// concurrently; the output order always follows the grid, and entries that
/// fail to converge are kept with converged == false.
std::vector<CurvePoint> convergence_curve(double s_min, double s_max, std::size_t samples,
                                          const AccelerationSettings& settings = default_limit_settings());

}  // namespace ngon
