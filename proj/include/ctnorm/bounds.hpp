#pragma once

#include <cstdint>
#include <optional>

#include "ctnorm/exponent.hpp"

namespace ctnorm {

/// The classical n-free sandwich of n^{-1/p} ||T_n||_p:
/// lower = [(2^p-1) zeta(p)]^{1/p}, upper = 2^{1/p} * lower.
struct BozkurtBounds {
    double lower;
    double upper;
};

BozkurtBounds bozkurt_bounds(double p, const PrecisionPolicy& policy = {});

/// Size-dependent corrections entering the refined sandwich.
struct RefinedCorrections {
    double lower_correction;  // (n^2+2)/((p-1) n^{p+1}) + 2^{p+1}/(n (2n-1)^p)
    double upper_correction;  // 2^{p-1}/((p-1) (2n+1)^{p-1})
};

RefinedCorrections refined_corrections(std::int64_t n, double p);

/// One bound evaluation against a normalized statistic. Strictness flags
/// record whether each side is a strict inequality; containment is checked
/// with a 1e-13 relative slack to absorb rounding.
struct BoundReport {
    std::int64_t n;
    double p;
    double statistic;
    std::optional<double> lower;
    std::optional<double> upper;
    bool lower_strict = true;
    bool upper_strict = true;
    bool vacuous = false;  // lower radicand nonpositive; the bound is uninformative
    bool contained = false;
};

/// Refined n-dependent sandwich of n^{-1/p} ||T_n||_p (n >= 2, p > 1):
/// [(1+2/n^2)(2^p-1) zeta(p) - C_lower]^{1/p}
///   < statistic < (2-1/n)^{1/p} [(2^p-1) zeta(p) - C_upper]^{1/p}.
BoundReport refined_bounds(std::int64_t n, double p, const PrecisionPolicy& policy = {});

/// Two-sided sandwich of the classical bound for reporting purposes.
BoundReport bozkurt_report(std::int64_t n, double p, const PrecisionPolicy& policy = {});

/// Right-hand constants of the conjectured two-sided l_{p,q} bound,
/// 4 (1/2 + 1/(2^p-1))^{1/p} and 4 (1/(2^p-1))^{1/p}; defined for
/// 1 <= p <= inf (limits 4 and 2 at p = inf).
double conjecture_upper_constant(double p);
double conjecture_lower_constant(double p);

/// Sign-check utilities behind the crossover constants.
/// delta_gap changes sign at delta (the n = 2 crossover of the lower bound);
/// mu_gap changes sign at mu (where the upper constant meets the asymptote);
/// order3_margin > 0 certifies the lower bound for every n >= 3;
/// order7_margin > 0 certifies that the upper bound holds through n = 7.
double delta_gap(double p);                                    // 3 - 2^p + 3^{-p} - (2/3)^p
double mu_gap(double p, const PrecisionPolicy& policy = {});   // lambda(p) - 2^{p-1}(1/2 + 1/(2^p-1))
double order3_margin(double p);
double order7_margin(double p);

}  // namespace ctnorm
