#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "ngon/polygon_clip.hpp"
#include "ngon/spiral.hpp"
#include "oracles.hpp"

using namespace ngon;
using std::numbers::pi;

TEST_CASE("theta at small n")
{
    CHECK(theta(2) == doctest::Approx(-3 * pi).epsilon(1e-15));
    CHECK(theta(3) == doctest::Approx(-11 * pi / 3).epsilon(1e-15));
    CHECK(theta(4) == doctest::Approx(-23 * pi / 6).epsilon(1e-15));
    CHECK_THROWS_AS(theta(1), std::domain_error);
}

TEST_CASE("theta closed form follows the angular recurrence")
{
    double worst = 0.0;
    oracle::ld rec = -3 * oracle::pi_l;
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        if (n > 2) {
            const oracle::ld k = static_cast<oracle::ld>(n - 1);
            rec += (k - 2) * oracle::pi_l / k + (k - 1) * oracle::pi_l / (k + 1) - oracle::pi_l;
        }
        worst = std::max(worst, std::abs(theta(static_cast<double>(n)) - static_cast<double>(rec)));
    }
    CHECK(worst < 1e-9);
    CHECK(std::abs(theta(777) - static_cast<double>(oracle::theta_recurrence(777))) < 1e-9);
}

TEST_CASE("heading sign identity")
{
    PhaseSequence phase;
    double worst = 0.0;
    while (phase.advance() < 20000) {
        const auto k = phase.index();
        if (k < 2) continue;
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        const ComplexPoint f = unit_turns(1.0 / double(k) - 2.0 * harmonic_number(k));
        worst = std::max(worst, std::abs(heading(double(k)) - sign * f));
        worst = std::max(worst, std::abs(phase.heading() - heading(double(k))));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("vertex examples")
{
    const auto f = LengthFunction::power_law(1);
    CHECK(vertex(f, 2) == ComplexPoint(0, 0));
    const ComplexPoint v3 = vertex(f, 3);
    CHECK(std::abs(v3 - ComplexPoint(1.0 / 6, std::sqrt(3.0) / 6)) < 1e-15);
    CHECK(std::abs(v3 - std::polar(1.0 / 3, theta(3))) < 1e-15);
    CHECK(std::abs(vertex(f, 4) - (v3 + std::polar(0.25, theta(4)))) < 1e-15);
    const auto seq = vertex_sequence(f, 500);
    REQUIRE(seq.size() == 499);
    CHECK(std::abs(seq.back() - vertex(f, 500)) < 1e-15);
    CHECK(std::abs(seq.back() - oracle::power_vertex_direct(1.0, 500)) < 1e-13);
}

TEST_CASE("vertex walker agrees with the long-double oracle far out")
{
    for (double s : {0.0, 0.5, 1.0}) {
        CHECK(std::abs(vertex(LengthFunction::power_law(s), 200000) - oracle::power_vertex_direct(s, 200000)) < 1e-10);
    }
}

TEST_CASE("q term and centers")
{
    const auto f = LengthFunction::power_law(1);
    // the first triangle has vertices 0, V(3) and 1/3
    CHECK(std::abs(center(f, 3) - ComplexPoint(1.0 / 6, std::sqrt(3.0) / 18)) < 1e-15);
    CHECK(std::abs(q_term(f, 3) - (center(f, 3) - vertex(f, 3))) < 1e-15);
    for (std::uint64_t n = 3; n <= 60; ++n) {
        const double circumradius = f(double(n)) / (2 * std::sin(pi / double(n)));
        CHECK(std::abs(std::abs(center(f, n) - vertex(f, n)) - circumradius) < 1e-14);
        CHECK(std::abs(std::abs(center(f, n) - vertex(f, n - 1)) - circumradius) < 1e-14);
    }
    CHECK_THROWS_AS(q_term(f, 1.0), std::domain_error);
}

TEST_CASE("sample bundles the per-polygon quantities")
{
    const auto f = LengthFunction::inscribed(0.5);
    const auto s = sample(f, 9);
    CHECK(s.index == 9.0);
    CHECK(s.theta == theta(9));
    CHECK(s.vertex == vertex(f, 9));
    CHECK(std::abs(s.center - (s.vertex + s.q)) < 1e-16);
}

TEST_CASE("polygon geometry for the power law")
{
    const auto f = LengthFunction::power_law(1);
    const auto polys = polygons(f, 12);
    REQUIRE(polys.size() == 10);
    for (const auto& poly : polys) {
        const double side = 1.0 / double(poly.n);
        REQUIRE(poly.vertices.size() == poly.n);
        CHECK(std::abs(poly.vertices[poly.shared_prev_index] - vertex(f, poly.n - 1)) < 1e-10);
        CHECK(std::abs(poly.vertices[poly.shared_next_index] - vertex(f, poly.n)) < 1e-10);
        CHECK(poly.interior_angle == doctest::Approx(pi * double(poly.n - 2) / double(poly.n)));
        CHECK_FALSE(poly.degenerate);
        for (std::size_t k = 0; k < poly.n; ++k) {
            const auto edge = poly.vertices[(k + 1) % poly.n] - poly.vertices[k];
            CHECK(std::abs(std::abs(edge) - side) < 1e-10);
        }
        CHECK(signed_area(poly.vertices) > 0);
    }
}

TEST_CASE("consecutive polygons have disjoint interiors")
{
    for (auto f : {LengthFunction::power_law(1), LengthFunction::power_law(0), LengthFunction::inscribed(0.5)}) {
        const auto polys = polygons(f, 13);
        for (std::size_t i = 0; i + 1 < polys.size(); ++i) {
            INFO(f.to_string() << " n=" << polys[i].n);
            CHECK(convex_intersection_area(polys[i].vertices, polys[i + 1].vertices) < 1e-12);
        }
    }
}

TEST_CASE("convex clipping sanity")
{
    const std::vector<ComplexPoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const std::vector<ComplexPoint> shifted{{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}};
    CHECK(signed_area(square) == 1.0);
    CHECK(convex_intersection_area(square, shifted) == doctest::Approx(0.25));
    const std::vector<ComplexPoint> clockwise(shifted.rbegin(), shifted.rend());
    CHECK(convex_intersection_area(square, clockwise) == doctest::Approx(0.25));
    const std::vector<ComplexPoint> far{{3, 3}, {4, 3}, {4, 4}};
    CHECK(convex_intersection_area(square, far) == 0.0);
}

TEST_CASE("degenerate polygon of the telescoping spiral")
{
    const auto poly = polygon(LengthFunction::telescoping(), 4);
    CHECK(poly.degenerate);
    CHECK(poly.vertices.size() == 4);
    for (const auto& v : poly.vertices) CHECK(std::abs(v - vertex(LengthFunction::telescoping(), 4)) < 1e-15);
}

TEST_CASE("interpolated vertex agrees with the integer vertices")
{
    for (auto f : {LengthFunction::power_law(1), LengthFunction::power_law(0.5), LengthFunction::inscribed(0)}) {
        for (std::uint64_t m = 3; m <= 12; ++m) {
            const auto r = interpolated_vertex(f, double(m));
            INFO(f.to_string() << " m=" << m);
            CHECK(r.converged);
            CHECK(std::abs(r.value - vertex(f, m)) < 1e-8);
        }
    }
    CHECK(std::abs(interpolated_vertex(LengthFunction::power_law(1), 2.0).value) < 1e-8);
}

TEST_CASE("interpolated vertex with bounded lengths")
{
    // s = 0: the difference series still converges at even integers
    const auto f = LengthFunction::power_law(0);
    for (std::uint64_t m : {4ull, 10ull, 1000ull}) {
        const auto r = interpolated_vertex(f, double(m));
        CHECK(std::abs(r.value - vertex(f, m)) < 1e-8);
    }
}

TEST_CASE("interpolated vertex between integers against brute summation")
{
    const double n = 3.5, s = 1.0;
    // H at n + 1 from the independent series, then upward recurrence
    oracle::ld h_shift = oracle::harmonic_series(n + 1.0L);
    oracle::ld h_int = 1.5L;
    const auto a = [&](oracle::ld x, oracle::ld h) {
        oracle::ld turns = 1.0L / x - 2 * h;
        turns -= std::nearbyint(turns);
        return std::polar(static_cast<double>(std::pow(x, -static_cast<oracle::ld>(s))),
                          static_cast<double>(2 * oracle::pi_l * turns));
    };
    const ComplexPoint rot = std::polar(1.0, pi * n);
    std::complex<oracle::ld> sum = 0, prev = 0;
    const std::uint64_t K = 2000000;
    for (std::uint64_t k = 3; k <= K; ++k) {
        const oracle::ld kk = static_cast<oracle::ld>(k);
        h_int += 1.0L / kk;
        if (k > 3) h_shift += 1.0L / (kk - 2 + n);
        const ComplexPoint term = (k % 2 == 0 ? 1.0 : -1.0) * (a(kk, h_int) - rot * a(kk - 2 + n, h_shift));
        prev = sum;
        sum += std::complex<oracle::ld>(term.real(), term.imag());
    }
    const std::complex<oracle::ld> averaged = 0.5L * (sum + prev);
    const ComplexPoint expected(static_cast<double>(averaged.real()), static_cast<double>(averaged.imag()));
    const auto r = interpolated_vertex(LengthFunction::power_law(s), n);
    CHECK(r.converged);
    CHECK(std::abs(r.value - expected) < 1e-8);
}

TEST_CASE("interpolated vertex with paired terms on a fast-decaying length")
{
    AccelerationSettings settings;
    settings.strategy = AccelerationStrategy::PairedTerms;
    settings.target_tolerance = 1e-13;
    settings.max_terms = 400000;
    const auto f = LengthFunction::power_law(2);
    for (std::uint64_t m : {3ull, 7ull, 12ull}) {
        const auto r = interpolated_vertex(f, double(m), settings);
        CHECK(std::abs(r.value - vertex(f, m)) < 1e-8);
    }
}

TEST_CASE("interpolated vertex refuses growing lengths")
{
    CHECK_THROWS_AS(interpolated_vertex(LengthFunction::power_law(-0.5), 5.5), std::domain_error);
    CHECK_THROWS_AS(interpolated_vertex(LengthFunction::power_law(1), 1.0), std::domain_error);
}
