#pragma once

// The n-gon spiral: a regular n-gon with side l(n) for every n >= 3, each
// sharing one side with its successor. The shared vertex V(n) of the n-gon and
// (n+1)-gon is the partial sum of l(k) exp(i theta_k) for 3 <= k <= n with
// V(2) = 0, and the n-gon's center is V(n) + Q(n).
//
// Orientation is fixed by theta_2 = -3 pi, which leaves no constant rotation
// on theta_n mod 2 pi.

#include <cstdint>
#include <vector>

#include "ngon/length_function.hpp"
#include "ngon/numerics.hpp"

namespace ngon {

/// Harmonic number at real x > -1; exact summation at small non-negative
/// integers, gamma + psi(x + 1) elsewhere.
double harmonic(double x);

/// theta_n = 2 pi (n/2 + 1/n - 2 H_n), the heading of the edge from V(n-1) to
/// V(n). Throws std::domain_error for n <= 1.
double theta(double n);

/// exp(i theta_n), evaluated with the argument reduced in turns so the result
/// stays accurate for large n. For real n, (-1)^n is exp(i pi n).
ComplexPoint heading(double n);

/// f(k) = exp(2 pi i (1/k - 2 H_k)) for k = 1, 2, ... computed incrementally.
class PhaseSequence {
public:
    /// Advances to the next index and returns it.
    std::uint64_t advance();
    std::uint64_t index() const { return harmonic_.index(); }
    ComplexPoint value() const { return value_; }
    /// exp(i theta_k) = (-1)^k f(k)
    ComplexPoint heading() const { return index() % 2 == 0 ? value_ : -value_; }

private:
    HarmonicSequence harmonic_;
    ComplexPoint value_{};
};

/// Walks V(2), V(3), ... for one length function with compensated summation.
class VertexWalker {
public:
    explicit VertexWalker(LengthFunction f);

    std::uint64_t index() const { return phase_.index(); }
    ComplexPoint vertex() const { return sum_.value(); }
    /// Moves to the next index and returns the new vertex.
    ComplexPoint step();
    void advance_to(std::uint64_t n);

private:
    LengthFunction length_;
    PhaseSequence phase_;
    CompensatedSum<ComplexPoint> sum_;
};

/// V_f(n) for n >= 2 (V(2) = 0).
ComplexPoint vertex(const LengthFunction& f, std::uint64_t n);

/// V_f(2), ..., V_f(n_max); element i is V(i + 2).
std::vector<ComplexPoint> vertex_sequence(const LengthFunction& f, std::uint64_t n_max);

/// Q_f(n) = (-1)^n l(n) exp(2 pi i (1/n - 2 H_n)) / (exp(2 pi i / n) - 1),
/// the offset from V(n) to the n-gon's center; n may be real (> 1).
ComplexPoint q_term(const LengthFunction& f, double n);

/// C_f(n) = V_f(n) + Q_f(n), n >= 3.
ComplexPoint center(const LengthFunction& f, std::uint64_t n);

struct SpiralSample {
    double index = 0.0;
    double theta = 0.0;
    ComplexPoint vertex;
    ComplexPoint q;
    ComplexPoint center;
};

/// All per-polygon quantities at integer n >= 3.
SpiralSample sample(const LengthFunction& f, std::uint64_t n);

struct PolygonGeometry {
    std::uint64_t n = 0;
    double side_length = 0.0;     // signed, as produced by the length function
    double interior_angle = 0.0;  // pi (n - 2) / n
    ComplexPoint center;
    /// vertices[k] = center + (V(n) - center) exp(2 pi i k / n); counter-clockwise
    std::vector<ComplexPoint> vertices;
    std::size_t shared_prev_index = 1;  // vertices[1] == V(n - 1)
    std::size_t shared_next_index = 0;  // vertices[0] == V(n)
    bool degenerate = false;            // zero side, all vertices coincide
};

/// Full vertex list of the n-gon (n >= 3).
PolygonGeometry polygon(const LengthFunction& f, std::uint64_t n);

/// Polygons 3..n_max sharing one vertex walk.
std::vector<PolygonGeometry> polygons(const LengthFunction& f, std::uint64_t n_max);

/// Settings used by the spiral's infinite sums when none are supplied.
AccelerationSettings default_series_settings();

/// Smooth continuation of V to real n > 1:
///   sum_{k>=3} [ l(k) exp(i theta_k) - l(k-2+n) exp(i theta_{k-2+n}) ].
/// The terms alternate in sign with smooth amplitudes and are summed by
/// sum_alternating. Throws std::domain_error for n <= 1 or for length
/// functions whose terms grow (negative asymptotic exponent).
SeriesResult interpolated_vertex(const LengthFunction& f, double n,
                                 const AccelerationSettings& settings = default_series_settings());

}  // namespace ngon
