#include "ngon/telescoping.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ngon/length_function.hpp"
#include "ngon/spiral.hpp"

namespace ngon::telescoping {

namespace {

using std::numbers::pi;

void require_above_one(double n, const char* what)
{
    if (!(n > 1.0) || !std::isfinite(n)) {
        throw std::domain_error(fmt::format("{}: n must be a finite value > 1, got {}", what, n));
    }
}

double fractional(double x) { return x - std::nearbyint(x); }

// exp(i pi n) exp(-4 pi i H_n)
ComplexPoint rotation(double n)
{
    return unit_turns(fractional(0.5 * n) + fractional(-2.0 * harmonic(n)));
}

// exp(-4 pi i H) from a compensated harmonic pair
ComplexPoint harmonic_rotation(double hi, double lo) { return unit_turns(fractional(-2.0 * hi) - 2.0 * lo); }

}  // namespace

ComplexPoint vertex_closed(double n)
{
    require_above_one(n, "vertex_closed");
    return -1.0 + rotation(n);
}

ComplexPoint q_closed(double n)
{
    require_above_one(n, "q_closed");
    const ComplexPoint e = unit_turns(1.0 / n);
    // (e + 1) / (e - 1) = -i cot(pi / n)
    const double cot = std::cos(pi / n) / std::sin(pi / n);
    return rotation(n) * (e + ComplexPoint{0.0, -cot});
}

ComplexPoint center_closed(double n) { return vertex_closed(n) + q_closed(n); }

ComplexPoint golden_intersection_point(double x)
{
    if (!(x > 0.0)) {
        throw std::domain_error("golden_intersection_point: x must be positive");
    }
    const double turns = -0.5 * (4.0 * (euler_gamma + digamma(x)) + x);
    const double cot = std::cos(pi * x) / std::sin(pi * x);
    return ComplexPoint{0.0, -1.0} * unit_turns(fractional(turns)) * cot - 1.0;
}

IdentityCheck verify_telescoping_identity(std::uint64_t n_max)
{
    if (n_max < 3) {
        throw std::domain_error("verify_telescoping_identity: n_max must be >= 3");
    }
    const auto length = LengthFunction::telescoping();
    IdentityCheck check;

    VertexWalker walker(length);
    PhaseSequence phase;
    phase.advance();
    HarmonicSequence previous;  // H_{k-1}
    previous.advance();
    HarmonicSequence current;   // H_k
    current.advance();
    current.advance();
    phase.advance();

    while (walker.index() < n_max) {
        const ComplexPoint v = walker.step();
        const auto n = walker.index();
        check.max_vertex_residual =
            std::max(check.max_vertex_residual, std::abs(v - vertex_closed(static_cast<double>(n))));

        phase.advance();
        previous.advance();
        current.advance();
        const double k = static_cast<double>(n);
        const ComplexPoint direct = length(k) * phase.heading();
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        const ComplexPoint paired = sign * (harmonic_rotation(previous.hi(), previous.lo()) +
                                            harmonic_rotation(current.hi(), current.lo()));
        check.max_term_residual = std::max(check.max_term_residual, std::abs(direct - paired));
    }
    return check;
}

LimitExtrapolation q_real_limit_at_one()
{
    LimitExtrapolation out;
    std::array<std::array<double, 4>, 4> table{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double h = std::pow(10.0, -static_cast<double>(i + 3));
        out.samples[i] = q_closed(1.0 + h).real();
        table[i][0] = out.samples[i];
        double factor = 1.0;
        for (std::size_t j = 1; j <= i; ++j) {
            factor *= 10.0;
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
        }
    }
    out.extrapolated = table[3][3];
    return out;
}

}  // namespace ngon::telescoping
