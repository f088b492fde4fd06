#pragma once

// The telescoping spiral, l(k) = 2 cos(2 pi / k). Its vertex sum collapses to
//   V_L(n) = -1 + (-1)^n exp(-4 pi i H_n),
// which continues to real n > 1 through H_n = gamma + psi(n + 1), with
// (-1)^n read as exp(i pi n). Every V_L(n) lies on the unit circle about -1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numbers>

#include "ngon/numerics.hpp"

namespace ngon::telescoping {

struct Constants {
    static constexpr double phi = std::numbers::phi;
    /// zeros of 2 cos(2 pi / n) on (1, inf)
    static constexpr double zero_low = 4.0 / 3.0;
    static constexpr double zero_high = 4.0;
    /// lim_{n->1+} Re Q_L(n)
    static constexpr double q_limit_at_1 = 4.0 * (1.0 - std::numbers::pi * std::numbers::pi / 6.0);
};

/// -1 + exp(i pi n) exp(-4 pi i H_n), n > 1.
ComplexPoint vertex_closed(double n);

/// exp(i pi n) exp(-4 pi i H_n) (e + (e + 1)/(e - 1)), e = exp(2 pi i / n), n > 1.
ComplexPoint q_closed(double n);

/// vertex_closed(n) + q_closed(n).
ComplexPoint center_closed(double n);

/// -i exp(-pi i (4 (gamma + psi(x)) + x)) cot(pi x) - 1, transcribed term for
/// term; at x = phi this is the self-intersection point of the center curve.
ComplexPoint golden_intersection_point(double x = Constants::phi);

struct IdentityCheck {
    /// max over 3 <= n <= n_max of |vertex(Telescoping, n) - vertex_closed(n)|
    double max_vertex_residual = 0.0;
    /// max over 3 <= k <= n_max of
    /// |L(k) exp(i theta_k) - (-1)^k (exp(-4 pi i H_{k-1}) + exp(-4 pi i H_k))|
    double max_term_residual = 0.0;

    double max_residual() const { return std::max(max_vertex_residual, max_term_residual); }
};

/// Compares the direct vertex sum with the closed form for 3 <= n <= n_max,
/// and checks the termwise pairing that makes the sum telescope.
IdentityCheck verify_telescoping_identity(std::uint64_t n_max);

struct LimitExtrapolation {
    /// Re Q_L(1 + 10^-k) for k = 3..6
    std::array<double, 4> samples{};
    double extrapolated = 0.0;
};

/// Richardson extrapolation (step ratio 10) of Re Q_L(n) as n -> 1+.
LimitExtrapolation q_real_limit_at_one();

}  // namespace ngon::telescoping
