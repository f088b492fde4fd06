#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ngon/convergence.hpp"
#include "oracles.hpp"

using namespace ngon;
using std::numbers::pi;

TEST_CASE("classification examples")
{
    const auto point = classify(LengthFunction::power_law(1));
    REQUIRE(std::holds_alternative<PointLimit>(point));
    CHECK(class_name(point) == "Point");
    CHECK(std::get<PointLimit>(point).converged);
    CHECK(std::abs(std::get<PointLimit>(point).value - limit_point(1.0).value) < 1e-13);

    const auto orbit = classify(LengthFunction::power_law(0));
    REQUIRE(std::holds_alternative<CircularOrbit>(orbit));
    CHECK(class_name(orbit) == "CircularOrbit");
    CHECK(std::get<CircularOrbit>(orbit).radius == power_law_orbit_radius);
    CHECK(std::abs(std::get<CircularOrbit>(orbit).center - oracle::w_limit_0) < 1e-10);

    const auto divergent = classify(LengthFunction::power_law(-0.5));
    REQUIRE(std::holds_alternative<Divergent>(divergent));
    CHECK(class_name(divergent) == "Divergent");
    CHECK_FALSE(std::get<Divergent>(divergent).reason.empty());

    CHECK(class_name(classify(LengthFunction::inscribed(-0.5))) == "Point");
    CHECK(class_name(classify(LengthFunction::inscribed(-1.5))) == "Divergent");
    CHECK(class_name(classify(LengthFunction::area_normalized(1))) == "Point");
}

TEST_CASE("bounded catalog lengths orbit a circle of radius |c|/2")
{
    const auto tele = classify(LengthFunction::telescoping());
    REQUIRE(std::holds_alternative<CircularOrbit>(tele));
    CHECK(std::get<CircularOrbit>(tele).radius == doctest::Approx(1.0));
    // every telescoping vertex lies on the unit circle about -1
    CHECK(std::abs(std::get<CircularOrbit>(tele).center - ComplexPoint(-1, 0)) < 1e-10);

    const auto ins = classify(LengthFunction::inscribed(-1));
    REQUIRE(std::holds_alternative<CircularOrbit>(ins));
    CHECK(std::get<CircularOrbit>(ins).radius == doctest::Approx(pi));
    // vertices far out sit at that distance from the center
    const auto& c = std::get<CircularOrbit>(ins);
    for (std::uint64_t n : {100000ull, 100001ull}) {
        CHECK(std::abs(std::abs(vertex(LengthFunction::inscribed(-1), n) - c.center) - c.radius) < 1e-3);
    }
}

TEST_CASE("limit point for large s is tiny")
{
    const auto r = limit_point(10.0);
    CHECK(r.converged);
    // |W(10)| <= sum_{k>=3} k^-10
    double tail = 0.0;
    for (int k = 3; k < 1000; ++k) tail += std::pow(double(k), -10.0);
    CHECK(std::abs(r.value) <= tail);
    CHECK(std::abs(r.value) < 3.2e-5);
}

TEST_CASE("limit point at s = 1 against a direct partial sum")
{
    const auto r = limit_point(1.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - oracle::power_vertex_direct(1.0, 10000000)) < 1e-5);
}

TEST_CASE("limit point near zero against high-precision values")
{
    CHECK(std::abs(limit_point(1e-8).value - oracle::w_1e8) < 1e-12);
    CHECK(std::abs(limit_point(1e-7).value - oracle::w_1e7) < 1e-12);
    CHECK(std::abs(limit_point(1e-6).value - oracle::w_1e6) < 1e-12);
    CHECK_THROWS_AS(limit_point(0.0), std::domain_error);
    CHECK_THROWS_AS(limit_point(-1.0), std::domain_error);
}

TEST_CASE("strategies agree for W(2)")
{
    AccelerationSettings settings = default_limit_settings();
    const auto euler = limit_point(2.0, settings);
    settings.strategy = AccelerationStrategy::PairedTerms;
    settings.target_tolerance = 1e-13;
    settings.max_terms = 1000000;
    settings.direct_prefix = 0;
    const auto paired = limit_point(2.0, settings);
    CHECK(std::abs(euler.value - paired.value) < 1e-8);
}

TEST_CASE("paired terms")
{
    const auto t = paired_term(2, 1.0);
    CHECK(t.j == 2);
    const auto f = LengthFunction::power_law(1);
    CHECK(std::abs(t.value - vertex(f, 4)) < 1e-15);
    CHECK_THROWS_AS(paired_term(1, 1.0), std::domain_error);
    CHECK_THROWS_AS(paired_term(2, -0.1), std::domain_error);
}

TEST_CASE("regrouped partial sums reproduce the even vertices")
{
    for (double s : {0.0, 0.5, 1.0}) {
        PairedSeries series(s);
        CompensatedSum<ComplexPoint> sum;
        const auto f = LengthFunction::power_law(s);
        VertexWalker walker(f);
        for (std::uint64_t j = 2; j <= 10000; ++j) {
            const auto term = series.next();
            REQUIRE(term.j == j);
            sum += term.value;
            if (j == 10 || j == 100 || j == 1000 || j == 10000) {
                walker.advance_to(2 * j);
                INFO("s=" << s << " j=" << j);
                CHECK(std::abs(sum.value() - walker.vertex()) < 1e-10);
            }
        }
    }
}

TEST_CASE("paired term magnitude bound")
{
    // |F(j)| <= (4 pi + s) (2j - 1)^(-1-s) for s in (0, 1]
    for (double s : {0.25, 0.5, 1.0}) {
        PairedSeries series(s);
        for (int i = 0; i < 5000; ++i) {
            const auto t = series.next();
            CHECK(std::abs(t.value) <= (4 * pi + s) * std::pow(2.0 * double(t.j) - 1, -1 - s) * (1 + 1e-12));
        }
    }
}

TEST_CASE("bound suite on random arguments")
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> j_dist(2, 1000000);
    std::uniform_real_distribution<double> s_dist(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const auto j = j_dist(rng);
        double s = 1.0 - s_dist(rng);  // (0, 1]
        const double a = bound_A(j, s);
        INFO("j=" << j << " s=" << s);
        CHECK(a > 0.0);
        CHECK(a < s);
        CHECK(bound_B(j) < bound_B(j + 1));
        CHECK(bound_B(j) < 4 * pi);
    }
    CHECK(bound_B(2) == doctest::Approx(5.795554957734409720).epsilon(1e-14));
    CHECK_THROWS_AS(bound_A(1, 0.5), std::domain_error);
}

TEST_CASE("absolute convergence of the paired series")
{
    for (double s : {0.25, 0.5, 1.0}) {
        PairedSeries series(s);
        CompensatedSum<double> total;
        for (int j = 2; j <= 100000; ++j) total += std::abs(series.next().value);
        const double bound = paired_absolute_bound(s);
        CHECK(bound == doctest::Approx((4 * pi + s) * std::pow(2.0, -1 - s) * oracle::hurwitz_brute(1 + s, 1.5, 1000000)).epsilon(1e-6));
        CHECK(total.value() < bound);
    }
}

TEST_CASE("orbit center by extrapolation")
{
    const auto est = orbit_center();
    CHECK(est.converged);
    CHECK(std::abs(est.center - oracle::w_limit_0) < 1e-11);
    CHECK(std::abs(est.center.real() - 1.21711960256553) < 1e-13);
    CHECK(std::abs(est.center.imag() - 2.68541404871695) < 1e-13);
    CHECK(est.richardson_spread < 1e-7);
    CHECK(est.s_values[2] == 1e-8);
    CHECK(std::abs(est.samples[2] - oracle::w_1e8) < 1e-12);
}

TEST_CASE("s = 0 vertices approach a circle of diameter 1")
{
    const auto center = orbit_center().center;
    VertexWalker walker(LengthFunction::power_law(0));
    walker.advance_to(1000000);
    CHECK(std::abs(std::abs(walker.vertex() - center) - 0.5) < 5e-3);
    walker.step();
    CHECK(std::abs(std::abs(walker.vertex() - center) - 0.5) < 5e-3);
}

TEST_CASE("orbit distance law")
{
    const auto same = orbit_distance_law(1.0, 1000);
    CHECK(same.empirical == 0.0);
    CHECK(same.predicted == 0.0);
    const auto two = orbit_distance_law(2.0, 100000);
    CHECK(two.predicted == doctest::Approx(0.936873647315303116).epsilon(1e-14));
    CHECK(std::abs(two.empirical - two.predicted) < 1e-2);
    const auto e = orbit_distance_law(2.71828, 100000);
    CHECK(e.predicted < 1e-4);
    CHECK(e.empirical < 1e-2);
    CHECK_THROWS_AS(orbit_distance_law(1.5, 3), std::domain_error);
    CHECK_THROWS_AS(orbit_distance_law(0.5, 10), std::domain_error);
}

TEST_CASE("convergence curve over the figure range")
{
    const auto curve = convergence_curve(0.0000726, 1.77, 12);
    REQUIRE(curve.size() == 12);
    CHECK(curve.front().s == 0.0000726);
    CHECK(curve.back().s == doctest::Approx(1.77).epsilon(1e-15));
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].limit.converged);
        CHECK(std::isfinite(std::abs(curve[i].limit.value)));
        if (i > 0) CHECK(curve[i].s > curve[i - 1].s);
    }
    CHECK(std::abs(curve.front().limit.value - limit_point(0.0000726).value) < 1e-14);
    CHECK(std::abs(curve.back().limit.value - limit_point(curve.back().s).value) < 1e-14);
}

TEST_CASE("limit modulus decreases for large s")
{
    const auto curve = convergence_curve(3.0, 30.0, 40);
    for (std::size_t i = 1; i < curve.size(); ++i) {
        CHECK(std::abs(curve[i].limit.value) < std::abs(curve[i - 1].limit.value));
    }
}

TEST_CASE("convergence curve edge cases")
{
    const auto single = convergence_curve(0.5, 1.0, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].s == 0.5);
    CHECK(single[0].limit.value == limit_point(0.5).value);
    CHECK_THROWS_AS(convergence_curve(0.5, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(convergence_curve(0.0, 1.0, 4), std::invalid_argument);

    AccelerationSettings starved = default_limit_settings();
    starved.max_terms = 16;
    starved.direct_prefix = 4;
    const auto rough = convergence_curve(0.01, 0.02, 3, starved);
    REQUIRE(rough.size() == 3);
    for (const auto& p : rough) CHECK_FALSE(p.limit.converged);
}
