#pragma once

#include <span>

#include "ctnorm/exponent.hpp"

namespace ctnorm {

/// Riemann zeta for real p > 1, by direct summation of the first
/// policy.zeta_terms terms plus an Euler-Maclaurin tail (integral term,
/// half term, Bernoulli corrections up to policy.zeta_bernoulli_order).
/// Throws DomainError when p < 1 + policy.min_p_gap.
double zeta(double p, const PrecisionPolicy& policy = {});

/// Sum of odd reciprocal powers, (1 - 2^{-p}) zeta(p) = sum_k (2k-1)^{-p}.
double odd_lambda(double p, const PrecisionPolicy& policy = {});

/// Power mean of order r of positive numbers: (mean of x^r)^{1/r} for
/// finite nonzero r, geometric mean at r = 0, max/min at r = +/-inf.
double power_mean(double r, std::span<const double> xs);

}  // namespace ctnorm
