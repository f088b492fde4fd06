#include "ngon/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ngon {

double harmonic_number(std::uint64_t n)
{
    if (n == 0) {
        throw std::domain_error("harmonic_number: n must be >= 1");
    }
    // Summing smallest terms first keeps the compensation term tiny.
    CompensatedSum<double> sum;
    for (std::uint64_t k = n; k >= 1; --k) {
        sum += 1.0 / static_cast<double>(k);
    }
    return sum.value();
}

namespace {

constexpr double digamma_shift_threshold = 12.0;

// B_{2k} / (2k), k = 1..7
constexpr std::array<double, 7> digamma_asymptotic_coefficients = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
};

}  // namespace

double digamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("digamma: argument must be positive and finite");
    }
    CompensatedSum<double> shift;
    while (x < digamma_shift_threshold) {
        shift += 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double series = 0.0;
    for (auto it = digamma_asymptotic_coefficients.rbegin(); it != digamma_asymptotic_coefficients.rend(); ++it) {
        series = series * inv2 + *it;
    }
    series *= inv2;
    return std::log(x) - 0.5 / x - series - shift.value();
}

double harmonic_continued(double x)
{
    if (!(x > -1.0)) {
        throw std::domain_error("harmonic_continued: argument must exceed -1");
    }
    return euler_gamma + digamma(x + 1.0);
}

ComplexPoint unit_turns(double t)
{
    const double r = t - std::nearbyint(t);
    const double angle = 2.0 * std::numbers::pi * r;
    return {std::cos(angle), std::sin(angle)};
}

std::string_view to_string(AccelerationStrategy strategy)
{
    switch (strategy) {
    case AccelerationStrategy::DirectPartialSums: return "direct";
    case AccelerationStrategy::PairedTerms: return "paired";
    case AccelerationStrategy::EulerTransform: return "euler";
    }
    return "unknown";
}

void AccelerationSettings::validate() const
{
    if (!(target_tolerance > 0.0)) {
        throw std::invalid_argument("AccelerationSettings: target_tolerance must be positive");
    }
    if (max_terms < 4) {
        throw std::invalid_argument("AccelerationSettings: max_terms must be at least 4");
    }
    if (direct_prefix + 4 > max_terms) {
        throw std::invalid_argument("AccelerationSettings: direct_prefix leaves no room for the tail");
    }
}

SeriesResult euler_transform_sum(const TermGenerator& next, const AccelerationSettings& settings)
{
    settings.validate();

    CompensatedSum<ComplexPoint> head;
    double sign = 1.0;
    for (std::size_t m = 0; m < settings.direct_prefix; ++m) {
        head += sign * next();
        sign = -sign;
    }

    // diagonal[j] holds Delta^j b_{q-j} for the tail terms b_q seen so far;
    // after receiving b_q, diagonal[q] is Delta^q b_0.
    std::vector<ComplexPoint> diagonal;
    diagonal.reserve(settings.max_terms - settings.direct_prefix);

    CompensatedSum<ComplexPoint> tail;
    SeriesResult result;
    double previous_correction = std::numeric_limits<double>::infinity();
    const std::size_t tail_budget = settings.max_terms - settings.direct_prefix;

    for (std::size_t q = 0; q < tail_budget; ++q) {
        ComplexPoint carry = next();
        for (auto& d : diagonal) {
            const ComplexPoint updated = carry - d;
            d = carry;
            carry = updated;
        }
        diagonal.push_back(carry);

        const double parity = (q % 2 == 0) ? 1.0 : -1.0;
        const ComplexPoint correction = parity * std::ldexp(1.0, -static_cast<int>(q) - 1) * carry;
        tail += correction;

        const double size = std::abs(correction);
        result.error_estimate = size;
        result.terms_used = settings.direct_prefix + q + 1;
        if (size < settings.target_tolerance && previous_correction < settings.target_tolerance) {
            result.converged = true;
            break;
        }
        previous_correction = size;
    }

    result.value = head.value() + sign * tail.value();
    return result;
}

namespace {

SeriesResult direct_sum(const TermGenerator& next, const AccelerationSettings& settings)
{
    CompensatedSum<ComplexPoint> sum;
    SeriesResult result;
    double sign = 1.0;
    for (std::size_t m = 0; m < settings.max_terms; ++m) {
        const ComplexPoint term = next();
        sum += sign * term;
        sign = -sign;
        result.terms_used = m + 1;
        result.error_estimate = std::abs(term);
        if (m >= settings.direct_prefix && result.error_estimate < settings.target_tolerance) {
            result.converged = true;
            break;
        }
    }
    result.value = sum.value();
    return result;
}

SeriesResult paired_sum(const TermGenerator& next, const AccelerationSettings& settings)
{
    CompensatedSum<ComplexPoint> sum;
    SeriesResult result;
    int quiet_steps = 0;
    for (std::size_t m = 0; m + 1 < settings.max_terms; m += 2) {
        const ComplexPoint even = next();
        const ComplexPoint odd = next();
        const ComplexPoint pair = even - odd;
        sum += pair;
        result.terms_used = m + 2;
        result.error_estimate = std::abs(pair);
        quiet_steps = result.error_estimate < settings.target_tolerance ? quiet_steps + 1 : 0;
        // three successive partial sums agree
        if (m >= settings.direct_prefix && quiet_steps >= 2) {
            result.converged = true;
            break;
        }
    }
    result.value = sum.value();
    return result;
}

}  // namespace

SeriesResult sum_alternating(const TermGenerator& next, const AccelerationSettings& settings)
{
    settings.validate();
    switch (settings.strategy) {
    case AccelerationStrategy::DirectPartialSums: return direct_sum(next, settings);
    case AccelerationStrategy::PairedTerms: return paired_sum(next, settings);
    case AccelerationStrategy::EulerTransform: return euler_transform_sum(next, settings);
    }
    throw std::invalid_argument("sum_alternating: unknown strategy");
}

namespace {

// B_{2k} / (2k)!, k = 1..8
constexpr std::array<double, 8> bernoulli_over_factorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

constexpr double hurwitz_block_start = 16.0;

}  // namespace

double hurwitz_zeta(double s, double a)
{
    if (!(s > 1.0)) {
        throw std::domain_error("hurwitz_zeta: s must exceed 1");
    }
    if (!(a > 0.0)) {
        throw std::domain_error("hurwitz_zeta: a must be positive");
    }

    CompensatedSum<double> sum;
    double x = a;
    while (x < hurwitz_block_start) {
        sum += std::pow(x, -s);
        x += 1.0;
    }

    // Euler-Maclaurin remainder for sum_{j>=0} (x + j)^(-s)
    const double x_pow = std::pow(x, -s);
    double tail = x * x_pow / (s - 1.0) + 0.5 * x_pow;
    double rising = s;          // s (s+1) ... (s+2k-2)
    double power = x_pow / x;   // x^(-s-2k+1)
    for (std::size_t k = 0; k < bernoulli_over_factorial.size(); ++k) {
        tail += bernoulli_over_factorial[k] * rising * power;
        rising *= (s + 2.0 * static_cast<double>(k) + 1.0) * (s + 2.0 * static_cast<double>(k) + 2.0);
        power /= x * x;
    }
    sum += tail;
    return sum.value();
}

}  // namespace ngon
