#pragma once

// Special functions and series-acceleration kernels used throughout the
// spiral library. Everything here is a pure function of its arguments.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <type_traits>

namespace ngon {

using ComplexPoint = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// Neumaier-compensated accumulator. Works for double and std::complex<double>
/// (compensation is carried per component).
template <typename T>
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(T initial) : sum_(initial) {}

    CompensatedSum& operator+=(T value)
    {
        if constexpr (std::is_same_v<T, double>) {
            add(sum_, comp_, value);
        } else {
            double re = sum_.real(), im = sum_.imag();
            double cre = comp_.real(), cim = comp_.imag();
            add(re, cre, value.real());
            add(im, cim, value.imag());
            sum_ = T{re, im};
            comp_ = T{cre, cim};
        }
        return *this;
    }
    CompensatedSum& operator-=(T value) { return *this += -value; }

    T value() const { return sum_ + comp_; }
    /// Leading part and residual; value() == hi() + lo() up to one rounding.
    T hi() const { return sum_; }
    T lo() const { return comp_; }

private:
    static void add(double& sum, double& comp, double value)
    {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            comp += (sum - t) + value;
        } else {
            comp += (value - t) + sum;
        }
        sum = t;
    }

    T sum_{};
    T comp_{};
};

/// H_n = 1 + 1/2 + ... + 1/n with compensated summation. Throws
/// std::domain_error for n == 0.
double harmonic_number(std::uint64_t n);

/// Running harmonic numbers H_1, H_2, ... with the compensation term exposed,
/// so callers can reduce 2*H_k modulo 1 without losing the low-order bits.
class HarmonicSequence {
public:
    /// Advances to the next index and returns it.
    std::uint64_t advance()
    {
        ++index_;
        sum_ += 1.0 / static_cast<double>(index_);
        return index_;
    }
    std::uint64_t index() const { return index_; }
    double value() const { return sum_.value(); }
    double hi() const { return sum_.hi(); }
    double lo() const { return sum_.lo(); }

private:
    std::uint64_t index_ = 0;
    CompensatedSum<double> sum_;
};

/// Digamma function for x > 0: upward recurrence to x >= 12, then the
/// seven-term Bernoulli asymptotic series.
double digamma(double x);

/// gamma + psi(x + 1); the continuation of H_x to real x > -1.
double harmonic_continued(double x);

/// exp(2*pi*i*t) with t reduced to [-1/2, 1/2] before the trig call.
ComplexPoint unit_turns(double t);

enum class AccelerationStrategy { DirectPartialSums, PairedTerms, EulerTransform };

std::string_view to_string(AccelerationStrategy strategy);

struct AccelerationSettings {
    double target_tolerance = 1e-12;  // absolute, on the complex modulus
    std::size_t max_terms = 4096;
    AccelerationStrategy strategy = AccelerationStrategy::EulerTransform;
    /// Terms summed directly before the accelerated tail begins. Oscillatory
    /// amplitudes need a prefix long enough for forward differences to shrink.
    std::size_t direct_prefix = 0;

    /// Throws std::invalid_argument unless target_tolerance > 0, max_terms >= 4
    /// and the prefix leaves room for the tail.
    void validate() const;
};

struct SeriesResult {
    ComplexPoint value;
    double error_estimate = 0.0;
    std::size_t terms_used = 0;
    bool converged = false;
};

/// Produces a_0, a_1, ... on successive calls.
using TermGenerator = std::function<ComplexPoint()>;

/// Sum of sum_{m>=0} (-1)^m a_m by Euler's transform. The first
/// `settings.direct_prefix` terms are added directly; the remainder is
/// summed as sum_p (-1)^p Delta^p a / 2^(p+1) with forward differences taken
/// on complex values. error_estimate is the modulus of the last correction.
/// Failing to reach the tolerance within max_terms yields converged == false
/// with the best estimate, never an exception.
SeriesResult euler_transform_sum(const TermGenerator& next, const AccelerationSettings& settings);

/// Same series, summed with whichever strategy the settings select.
SeriesResult sum_alternating(const TermGenerator& next, const AccelerationSettings& settings);

/// Hurwitz zeta sum_{j>=0} (j + a)^(-s) for s > 1, a > 0: a direct block plus
/// an Euler-Maclaurin tail.
double hurwitz_zeta(double s, double a);

}  // namespace ngon
