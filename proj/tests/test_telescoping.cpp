#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "ngon/spiral.hpp"
#include "ngon/telescoping.hpp"

using namespace ngon;
using namespace ngon::telescoping;
using std::numbers::pi;

namespace {
const LengthFunction L = LengthFunction::telescoping();
}

TEST_CASE("closed-form vertices")
{
    CHECK(std::abs(vertex_closed(2.0)) < 1e-14);
    CHECK(std::abs(vertex_closed(3.0) - ComplexPoint(-0.5, -std::sqrt(3.0) / 2)) < 1e-14);
    CHECK(std::abs(vertex_closed(1000.0) - vertex(L, 1000)) < 1e-11);
    CHECK_THROWS_AS(vertex_closed(1.0), std::domain_error);
    CHECK_THROWS_AS(vertex_closed(std::nan("")), std::domain_error);
}

TEST_CASE("telescoping identity")
{
    CHECK(verify_telescoping_identity(3).max_residual() < 1e-14);
    CHECK(verify_telescoping_identity(12).max_residual() < 1e-12);
    const auto check = verify_telescoping_identity(2000);
    CHECK(check.max_vertex_residual < 1e-10);
    CHECK(check.max_term_residual < 1e-10);
    CHECK_THROWS_AS(verify_telescoping_identity(2), std::domain_error);
}

TEST_CASE("closed-form vertices lie on the unit circle about -1")
{
    double worst = 0.0;
    for (int i = 1; i <= 10000; ++i) {
        const double n = 1.01 + (100.0 - 1.01) * i / 10000.0;
        worst = std::max(worst, std::abs(std::abs(vertex_closed(n) + 1.0) - 1.0));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("q closed form vanishes at the zeros of the length")
{
    CHECK(std::abs(q_closed(4.0)) < 1e-14);
    CHECK(std::abs(q_closed(4.0 / 3.0)) < 1e-14);
    CHECK(std::abs(center_closed(4.0) - vertex_closed(4.0)) < 1e-14);
}

TEST_CASE("q closed form agrees with the generic correction term")
{
    double worst = 0.0;
    for (std::uint64_t m = 3; m <= 2000; ++m) {
        worst = std::max(worst, std::abs(q_closed(double(m)) - q_term(L, double(m))));
    }
    CHECK(worst < 1e-11);
    // real arguments too
    for (double x : {1.2, 1.5, 2.5, 7.25, 33.3}) {
        CHECK(std::abs(q_closed(x) - q_term(L, x)) < 1e-11);
    }
}

TEST_CASE("closed-form centers at integers")
{
    for (std::uint64_t m = 3; m <= 50; ++m) {
        CHECK(std::abs(center_closed(double(m)) - center(L, m)) < 1e-12);
    }
}

TEST_CASE("q near n = 1")
{
    CHECK(std::abs(q_closed(1.0 + 1e-6).real() - Constants::q_limit_at_1) < 1e-2);
    const auto ex = q_real_limit_at_one();
    CHECK(std::abs(ex.samples[0] - q_closed(1.001).real()) < 1e-15);
    CHECK(std::abs(ex.extrapolated - Constants::q_limit_at_1) < 1e-3);
    CHECK(Constants::q_limit_at_1 == doctest::Approx(-2.579736267392905746).epsilon(1e-15));
}

TEST_CASE("golden-ratio self-intersection of the center curve")
{
    const double phi = Constants::phi;
    CHECK(std::abs(center_closed(phi) - center_closed(phi + 1)) < 1e-10);
    CHECK(std::abs(golden_intersection_point() - center_closed(phi)) < 1e-10);
    CHECK(std::abs(golden_intersection_point(phi) - golden_intersection_point()) == 0.0);
    CHECK_THROWS_AS(golden_intersection_point(0.0), std::domain_error);
}

TEST_CASE("the length is negative between its zeros")
{
    for (double x = 1.34; x < 4.0; x += 0.01) CHECK(L(x) < 0);
    for (double x = 1.01; x < 1.33; x += 0.01) CHECK(L(x) > 0);
    for (double x = 4.01; x < 50.0; x += 0.37) CHECK(L(x) > 0);
}
