#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ctnorm/errors.hpp"
#include "ctnorm/kahan.hpp"
#include "ctnorm/rng.hpp"
#include "ctnorm/special.hpp"

using namespace ctnorm;

namespace {

// Brute-force series oracle: 10^7 direct terms plus integral tail and half
// term; accurate to ~1e-15 relative for p in [1.1, 5].
double zeta_series_oracle(double p) {
    const long terms = 10000000;
    KahanSum s;
    for (long k = 1; k <= terms; ++k) s.add(std::pow(static_cast<double>(k), -p));
    const double nd = static_cast<double>(terms);
    return s.value() + std::pow(nd, 1.0 - p) / (p - 1.0) - 0.5 * std::pow(nd, -p);
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("zeta matches classical closed forms") {
    CHECK(rel_diff(zeta(2.0), M_PI * M_PI / 6.0) < 1e-13);
    CHECK(rel_diff(zeta(4.0), std::pow(M_PI, 4) / 90.0) < 1e-13);
}

TEST_CASE("zeta matches the brute-force series oracle") {
    for (const double p : {1.1, 1.5, 2.0, 3.0, 5.0}) {
        CAPTURE(p);
        CHECK(rel_diff(zeta(p), zeta_series_oracle(p)) < 1e-10);
    }
}

TEST_CASE("zeta rejects p too close to 1") {
    CHECK_THROWS_AS(zeta(1.0000005), DomainError);
    CHECK_THROWS_AS(zeta(0.5), DomainError);
    CHECK_THROWS_AS(zeta(std::nan("")), DomainError);

    PrecisionPolicy strict;
    strict.min_p_gap = 1e-5;
    CHECK_THROWS_AS(odd_lambda(1.0 + 1e-6, strict), DomainError);
    CHECK_NOTHROW(zeta(1.0 + 2e-5, strict));
}

TEST_CASE("zeta respects the policy knobs") {
    PrecisionPolicy coarse;
    coarse.zeta_terms = 64;
    coarse.zeta_bernoulli_order = 6;
    CHECK(rel_diff(zeta(1.5, coarse), zeta(1.5)) < 1e-12);

    PrecisionPolicy bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(zeta(2.0, bad), DomainError);
}

TEST_CASE("odd_lambda sums odd reciprocal powers") {
    CHECK(rel_diff(odd_lambda(2.0), M_PI * M_PI / 8.0) < 1e-13);
    CHECK(rel_diff(odd_lambda(3.0), 7.0 / 8.0 * zeta_series_oracle(3.0)) < 1e-12);

    // Identity against zeta over a p sweep.
    for (double p = 1.001; p < 20.0; p += 0.83)
        CHECK(rel_diff(odd_lambda(p), (1.0 - std::pow(2.0, -p)) * zeta(p)) < 1e-12);
}

TEST_CASE("power mean: closed cases") {
    const std::vector<double> one_three = {1.0, 3.0};
    CHECK(power_mean(1.0, one_three) == doctest::Approx(2.0).epsilon(1e-14));

    const std::vector<double> v = {1.0, 3.0, 2.0};
    CHECK(power_mean(std::numeric_limits<double>::infinity(), v) == 3.0);
    CHECK(power_mean(-std::numeric_limits<double>::infinity(), v) == 1.0);

    const std::vector<double> three_four = {3.0, 4.0};
    CHECK(power_mean(2.0, three_four) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-14));

    const std::vector<double> one_four = {1.0, 4.0};
    CHECK(power_mean(0.0, one_four) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("power mean: domain errors") {
    CHECK_THROWS_AS(power_mean(2.0, std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(power_mean(2.0, std::vector<double>{1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(power_mean(2.0, std::vector<double>{1.0, -3.0}), DomainError);
    CHECK_THROWS_AS(power_mean(std::nan(""), std::vector<double>{1.0}), DomainError);
}

TEST_CASE("power mean: monotone in the order and continuous") {
    Rng rng(91);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> xs(static_cast<std::size_t>(rng.uniform_int(2, 9)));
        for (double& x : xs) x = std::exp(rng.uniform(-5.0, 5.0));
        const double r = rng.uniform(-6.0, 6.0);
        const double s = r + rng.uniform(0.3, 4.0);
        const double mr = power_mean(r, xs);
        const double ms = power_mean(s, xs);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(mr <= ms * (1.0 + 1e-12));
        const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
        if (*mx / *mn > 1.0 + 1e-9) CHECK(mr < ms);

        CHECK(std::abs(power_mean(r + 1e-8, xs) - mr) < 1e-6);
    }
}

TEST_CASE("exponent validation") {
    CHECK(Exponent(1.0).value() == 1.0);
    CHECK(Exponent(3.25).is_finite());
    CHECK(!Exponent::inf().is_finite());
    CHECK_THROWS_AS(Exponent(0.999), DomainError);
    CHECK_THROWS_AS(Exponent(-2.0), DomainError);
    CHECK_THROWS_AS(Exponent(std::nan("")), DomainError);
    CHECK_THROWS_AS(Exponent(-std::numeric_limits<double>::infinity()), DomainError);
}
