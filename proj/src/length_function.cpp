#include "ngon/length_function.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace ngon {

namespace {

using std::numbers::pi;

double parse_exponent(std::string_view text, std::string_view whole)
{
    double value = 0.0;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw std::invalid_argument(fmt::format("invalid exponent in length spec '{}'", whole));
    }
    return value;
}

}  // namespace

LengthFunction LengthFunction::parse(std::string_view text)
{
    if (text == "telescoping") {
        return telescoping();
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument(fmt::format("unknown length spec '{}'", text));
    }
    const auto name = text.substr(0, colon);
    const double s = parse_exponent(text.substr(colon + 1), text);
    if (name == "power") return power_law(s);
    if (name == "inscribed") return inscribed(s);
    if (name == "circumscribed") return circumscribed(s);
    if (name == "area") return area_normalized(s);
    throw std::invalid_argument(fmt::format("unknown length kind '{}'", name));
}

double LengthFunction::operator()(double x) const
{
    if (!(x > 1.0)) {
        throw std::domain_error(fmt::format("length function evaluated at x = {} (need x > 1)", x));
    }
    switch (kind_) {
    case LengthKind::PowerLaw:
        return std::pow(x, -s_);
    case LengthKind::Inscribed:
        return 2.0 * std::pow(x, -s_) * std::sin(pi / x);
    case LengthKind::Circumscribed:
        if (x == 2.0) {
            throw std::domain_error("circumscribed length is infinite at x = 2");
        }
        return 2.0 * std::pow(x, -s_) * std::tan(pi / x);
    case LengthKind::AreaNormalized:
        if (!(x > 2.0)) {
            throw std::domain_error(fmt::format("area-normalized length needs x > 2, got {}", x));
        }
        return std::sqrt(4.0 * std::pow(x, -s_) * std::tan(pi / x) / x);
    case LengthKind::Telescoping:
        // 2 cos(2 pi / x) written as a sine of a reduced argument so the zero at x = 4 is exact
        return 2.0 * std::sin(pi * (0.5 - 2.0 / x));
    }
    throw std::logic_error("unknown length kind");
}

AsymptoticExponent LengthFunction::asymptotic_exponent() const
{
    AsymptoticExponent result;
    switch (kind_) {
    case LengthKind::PowerLaw:
        result = {s_, 1.0};
        break;
    case LengthKind::Inscribed:
    case LengthKind::Circumscribed:
        // 2 x^-s sin(pi/x) and 2 x^-s tan(pi/x) are both 2 pi x^(-1-s) + O(x^(-3-s))
        result = {1.0 + s_, 2.0 * pi};
        break;
    case LengthKind::AreaNormalized:
        // sqrt(4 x^-s tan(pi/x) / x) ~ 2 sqrt(pi) x^(-1-s/2)
        result = {1.0 + 0.5 * s_, 2.0 * std::sqrt(pi)};
        break;
    case LengthKind::Telescoping:
        result = {0.0, 2.0};
        break;
    }
    result.non_vanishing = result.exponent == 0.0;
    return result;
}

std::string LengthFunction::to_string() const
{
    switch (kind_) {
    case LengthKind::PowerLaw: return fmt::format("power:{}", s_);
    case LengthKind::Inscribed: return fmt::format("inscribed:{}", s_);
    case LengthKind::Circumscribed: return fmt::format("circumscribed:{}", s_);
    case LengthKind::AreaNormalized: return fmt::format("area:{}", s_);
    case LengthKind::Telescoping: return "telescoping";
    }
    return "unknown";
}

}  // namespace ngon
