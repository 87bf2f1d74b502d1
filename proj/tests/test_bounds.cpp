#include <doctest.h>

#include <cmath>

#include "ctnorm/bounds.hpp"
#include "ctnorm/errors.hpp"
#include "ctnorm/norms.hpp"
#include "ctnorm/special.hpp"

using namespace ctnorm;

TEST_CASE("classical bounds at closed-form points") {
    const auto at2 = bozkurt_bounds(2.0);
    CHECK(at2.lower == doctest::Approx(M_PI / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(at2.upper == doctest::Approx(M_PI).epsilon(1e-13));

    const auto at3 = bozkurt_bounds(3.0);
    CHECK(at3.lower == doctest::Approx(std::pow(7.0 * zeta(3.0), 1.0 / 3.0)).epsilon(1e-13));

    for (const double p : {1.3, 2.0, 7.0})
        CHECK(bozkurt_bounds(p).upper / bozkurt_bounds(p).lower ==
              doctest::Approx(std::pow(2.0, 1.0 / p)).epsilon(1e-14));

    CHECK_THROWS_AS(bozkurt_bounds(1.0 + 1e-9), DomainError);
}

TEST_CASE("refined sandwich at the worked point") {
    const auto r = refined_bounds(2, 2.0);
    REQUIRE(r.lower.has_value());
    CHECK(*r.lower == doctest::Approx(2.4915).epsilon(1e-3));
    CHECK(r.statistic == doctest::Approx(2.4944).epsilon(1e-3));
    CHECK(*r.upper == doctest::Approx(2.6081).epsilon(1e-3));
    CHECK(r.contained);
    CHECK(!r.vacuous);

    // Re-derive both sides from scratch.
    const double z = 3.0 * zeta(2.0);
    const double c_lower = 6.0 / 8.0 + 8.0 / 18.0;
    const double c_upper = 2.0 / 5.0;
    CHECK(*r.lower == doctest::Approx(std::sqrt(1.5 * z - c_lower)).epsilon(1e-14));
    CHECK(*r.upper == doctest::Approx(std::sqrt(1.5) * std::sqrt(z - c_upper)).epsilon(1e-14));
    CHECK(r.statistic ==
          doctest::Approx(oracle_norm(2, 2.0).value / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("refined corrections are positive and the bound improves") {
    for (const std::int64_t n : {2, 3, 10, 1000})
        for (const double p : {1.1, 2.0, 5.0}) {
            const auto c = refined_corrections(n, p);
            CHECK(c.lower_correction > 0.0);
            CHECK(c.upper_correction > 0.0);
        }
    CHECK_THROWS_AS(refined_corrections(1, 2.0), DomainError);
    CHECK_THROWS_AS(refined_bounds(1, 2.0), DomainError);
    CHECK_THROWS_AS(refined_bounds(2, 1.0 + 1e-7), DomainError);

    const auto refined = refined_bounds(100, 1.5);
    CHECK(refined.contained);
    CHECK(*refined.upper < bozkurt_bounds(1.5).upper);
}

TEST_CASE("conjecture constants") {
    CHECK(conjecture_upper_constant(1.0) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(conjecture_lower_constant(1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(conjecture_upper_constant(2.0) ==
          doctest::Approx(4.0 * std::sqrt(5.0 / 6.0)).epsilon(1e-14));
    CHECK(conjecture_lower_constant(2.0) == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-14));

    const double inf = std::numeric_limits<double>::infinity();
    CHECK(conjecture_upper_constant(inf) == 4.0);
    CHECK(conjecture_lower_constant(inf) == 2.0);

    for (double p = 1.0; p < 40.0; p += 0.7)
        CHECK(conjecture_lower_constant(p) < conjecture_upper_constant(p));
    CHECK_THROWS_AS(conjecture_upper_constant(0.3), DomainError);
}

TEST_CASE("sign functions at their rational anchor points") {
    CHECK(delta_gap(1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(delta_gap(2.0) == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
    CHECK(order3_margin(1.0) == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(order7_margin(1.0) == doctest::Approx(4042.0 / 6435.0).epsilon(1e-13));

    CHECK(mu_gap(1.5) > 0.0);
    CHECK(mu_gap(1.7) < 0.0);
    CHECK_THROWS_AS(mu_gap(1.0 + 1e-9), DomainError);
}
