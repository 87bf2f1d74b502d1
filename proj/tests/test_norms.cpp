#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ctnorm/errors.hpp"
#include "ctnorm/kahan.hpp"
#include "ctnorm/norms.hpp"
#include "ctnorm/rng.hpp"

using namespace ctnorm;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Direct per-column summation, independent of the prefix-table layout.
std::vector<double> direct_column_sums(std::int64_t n, double p) {
    std::vector<double> sums(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t j = 1; j <= n; ++j) {
        KahanSum s;
        for (std::int64_t i = 1; i <= n; ++i)
            s.add(std::pow(std::abs(2.0 / static_cast<double>(1 + 2 * (i - j))), p));
        sums[static_cast<std::size_t>(j - 1)] = s.value();
    }
    return sums;
}

}  // namespace

TEST_CASE("entries and index guards") {
    const CTMatrixSpec spec(3);
    CHECK(entry(spec, 1, 1) == 2.0);
    CHECK(entry(spec, 1, 2) == -2.0);
    CHECK(entry(spec, 3, 1) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(entry(spec, 2, 3) == -2.0);
    CHECK_THROWS_AS(entry(spec, 0, 1), IndexError);
    CHECK_THROWS_AS(entry(spec, 1, 4), IndexError);
    CHECK_THROWS_AS(CTMatrixSpec(0), DomainError);
}

TEST_CASE("column power sums: closed cases") {
    const auto two_one = column_power_sums(2, 1.0);
    REQUIRE(two_one.sums.size() == 2);
    CHECK(two_one.sums[0] == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    CHECK(two_one.sums[1] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(two_one.n0 == 2);

    const double p = 2.37;
    const auto two_p = column_power_sums(2, p);
    CHECK(two_p.sums[0] ==
          doctest::Approx(std::pow(2.0, p) * (1.0 + std::pow(3.0, -p))).epsilon(1e-14));
    CHECK(two_p.sums[1] == doctest::Approx(std::pow(2.0, p + 1.0)).epsilon(1e-14));

    const auto one = column_power_sums(1, 4.2);
    CHECK(one.sums[0] == doctest::Approx(std::pow(2.0, 4.2)).epsilon(1e-14));
    CHECK(one.n0 == 1);

    CHECK_THROWS_AS(column_power_sums(3, Exponent::inf()), DomainError);
}

TEST_CASE("column power sums match direct summation") {
    for (const std::int64_t n : {2, 3, 4, 5, 12, 37}) {
        const double p = 1.9;
        const auto cps = column_power_sums(n, p);
        const auto direct = direct_column_sums(n, p);
        for (std::size_t j = 0; j < direct.size(); ++j) {
            CAPTURE(n);
            CAPTURE(j);
            CHECK(rel_diff(cps.sums[j], direct[j]) < 1e-13);
        }
        const auto it = std::max_element(cps.sums.begin(), cps.sums.end());
        CHECK((it - cps.sums.begin()) + 1 == cps.n0);
    }
}

TEST_CASE("lp norm: closed cases") {
    for (const double p : {1.0, 1.7, 3.0, 26.0}) CHECK(norm_p(1, p).value == 2.0);
    CHECK(norm_p(2, 1.0).value == doctest::Approx(20.0 / 3.0).epsilon(1e-14));
    CHECK(norm_p(3, 2.0).value == doctest::Approx(std::sqrt(1612.0 / 75.0)).epsilon(1e-14));

    // ||T_3||_p^p = 2^p (5 + 3^{1-p} + 5^{-p})
    const double p = 2.6;
    const double expected =
        std::pow(std::pow(2.0, p) * (5.0 + std::pow(3.0, 1.0 - p) + std::pow(5.0, -p)), 1.0 / p);
    CHECK(norm_p(3, p).value == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("lpq norm: closed cases") {
    CHECK(norm_pq(2, 1.0, 1.0).value == doctest::Approx(20.0 / 3.0).epsilon(1e-14));

    // ||T_2||_{p,q} = 2((1+3^{-p})^{q/p} + 2^{q/p})^{1/q}
    const double p = 1.3, q = 2.6;
    const double expected =
        2.0 * std::pow(std::pow(1.0 + std::pow(3.0, -p), q / p) + std::pow(2.0, q / p), 1.0 / q);
    CHECK(norm_pq(2, p, q).value == doctest::Approx(expected).epsilon(1e-14));

    CHECK(norm_pq(5, Exponent::inf(), 2.0).value ==
          doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-14));
    CHECK(norm_pq(9, Exponent::inf(), Exponent::inf()).value == 2.0);

    // q = inf picks the strongest column.
    const auto cps = column_power_sums(11, 1.8);
    const double expect_max = std::pow(cps.sums[static_cast<std::size_t>(cps.n0 - 1)], 1.0 / 1.8);
    CHECK(norm_pq(11, 1.8, Exponent::inf()).value == doctest::Approx(expect_max).epsilon(1e-13));

    // p = q reduces to the entrywise norm.
    CHECK(norm_pq(17, 2.4, 2.4).value == doctest::Approx(norm_p(17, 2.4).value).epsilon(1e-15));
}

TEST_CASE("oracle norm agrees and caps") {
    CHECK(oracle_norm(1, 3.0).value == 2.0);
    CHECK(oracle_norm(2, 2.0).value == doctest::Approx(std::sqrt(112.0 / 9.0)).epsilon(1e-14));
    CHECK(rel_diff(norm_pq(50, 1.3, 2.7).value, oracle_norm(50, 1.3, 2.7).value) < 1e-11);
    CHECK_THROWS_AS(oracle_norm(10001, 2.0), SizeError);
    CHECK_THROWS_AS(oracle_norm(10001, 2.0, 3.0), SizeError);
}

TEST_CASE("closed forms match the oracle on random cells") {
    Rng rng(417);
    for (int cell = 0; cell < 60; ++cell) {
        const std::int64_t n = rng.uniform_int(1, 120);
        const double p = rng.uniform(1.0, 6.0);
        const double q = rng.uniform(1.0, 6.0);
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(rel_diff(norm_pq(n, p, q).value, oracle_norm(n, p, q).value) < 1e-11);
        CHECK(rel_diff(norm_p(n, p).value, oracle_norm(n, p).value) < 1e-11);
    }
}

TEST_CASE("statistics nest like power means") {
    Rng rng(58);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t n = rng.uniform_int(1, 80);
        const double p = rng.uniform(1.0, 6.0);
        const double q = rng.uniform(1.0, p);
        const double low = lp1_statistic(n, p);
        const double mid = lpq_statistic(n, p, q);
        const double high = lp_statistic(n, p);
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(low <= mid * (1.0 + 1e-12));
        CHECK(mid <= high * (1.0 + 1e-12));
    }
}

TEST_CASE("asymptote value and guard") {
    CHECK(asymptote_p(2.0) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK_THROWS_AS(asymptote_p(1.0 + 1e-9), DomainError);

    for (const double p : {1.5, 2.0}) {
        const double asym = asymptote_p(p);
        for (const std::int64_t n : {10, 100, 10000}) {
            CAPTURE(p);
            CAPTURE(n);
            CHECK(lp_statistic(n, p) < asym);
            CHECK(lp1_statistic(n, p) < asym);
        }
    }
}

TEST_CASE("lp statistic sweep is consistent and increasing") {
    const double p = 1.4;
    std::vector<double> swept;
    lp_statistic_sweep(3000, p, [&](std::int64_t, double stat) { swept.push_back(stat); });
    REQUIRE(swept.size() == 3000);
    CHECK(swept[0] == doctest::Approx(2.0).epsilon(1e-14));
    for (const std::int64_t n : {1, 2, 17, 800, 3000})
        CHECK(rel_diff(swept[static_cast<std::size_t>(n - 1)], lp_statistic(n, p)) < 1e-13);
    for (std::size_t i = 1; i < swept.size(); ++i) CHECK(swept[i] > swept[i - 1]);
}

TEST_CASE("lp1 statistic is nondecreasing in n") {
    const double p = 1.5;
    double prev = 0.0;
    for (std::int64_t n = 1; n <= 300; ++n) {
        const double stat = lp1_statistic(n, p);
        CHECK(prev <= stat * (1.0 + 1e-13));
        prev = stat;
    }
    CHECK(lp1_statistic(1, 2.0) == 2.0);
}
