#pragma once

#include <string>
#include <string_view>

namespace ngon {

enum class LengthKind { PowerLaw, Inscribed, Circumscribed, AreaNormalized, Telescoping };

/// Leading power-law behaviour l(x) ~ c * x^(-exponent) as x -> infinity.
struct AsymptoticExponent {
    double exponent = 0.0;
    /// lim l(x) * x^exponent; nonzero by construction.
    double leading_coefficient = 1.0;
    /// True when the terms stay bounded away from zero (exponent == 0).
    bool non_vanishing = false;
};

/// Side length assigned to the n-gon. Immutable value type; the catalog
/// covers the power law n^-s, inscribed and circumscribed polygons of
/// circumradius/inradius n^-s, polygons of area n^-s, and the telescoping
/// length 2 cos(2 pi / n).
class LengthFunction {
public:
    static LengthFunction power_law(double s) { return {LengthKind::PowerLaw, s}; }
    static LengthFunction inscribed(double s) { return {LengthKind::Inscribed, s}; }
    static LengthFunction circumscribed(double s) { return {LengthKind::Circumscribed, s}; }
    static LengthFunction area_normalized(double s) { return {LengthKind::AreaNormalized, s}; }
    static LengthFunction telescoping() { return {LengthKind::Telescoping, 0.0}; }

    /// Parses "power:S", "inscribed:S", "circumscribed:S", "area:S" or
    /// "telescoping". Throws std::invalid_argument on anything else.
    static LengthFunction parse(std::string_view text);

    LengthKind kind() const { return kind_; }
    /// Exponent parameter s; 0 for the telescoping length.
    double s() const { return s_; }

    /// l(x) for real x > 1. Signed: the telescoping length is negative on
    /// (4/3, 4). Throws std::domain_error for x <= 1, and at x = 2 for the
    /// tangent-based kinds (AreaNormalized additionally needs x > 2).
    double operator()(double x) const;

    AsymptoticExponent asymptotic_exponent() const;

    /// Round-trips through parse().
    std::string to_string() const;

    bool operator==(const LengthFunction&) const = default;

private:
    LengthFunction(LengthKind kind, double s) : kind_(kind), s_(s) {}

    LengthKind kind_;
    double s_;
};

inline double eval(const LengthFunction& f, double x) { return f(x); }

}  // namespace ngon
