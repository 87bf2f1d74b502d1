#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "ctnorm/errors.hpp"

namespace ctnorm {

/// Validated norm exponent: a finite real >= 1, or +infinity.
class Exponent {
public:
    // Implicit so call sites can pass plain doubles; validation still runs.
    Exponent(double v) : value_(v) {
        if (std::isnan(v) || v < 1.0)
            throw DomainError("exponent must be >= 1 or +inf, got " + std::to_string(v));
    }

    static Exponent inf() { return Exponent(std::numeric_limits<double>::infinity()); }

    double value() const { return value_; }
    bool is_finite() const { return std::isfinite(value_); }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
    friend bool operator<(const Exponent& a, const Exponent& b) { return a.value_ < b.value_; }

private:
    double value_;
};

/// Accuracy knobs shared by every zeta-based quantity.
struct PrecisionPolicy {
    double rel_tol = 1e-12;       // target relative error of zeta-based values
    int zeta_terms = 32;          // direct-sum cutoff before the tail correction
    int zeta_bernoulli_order = 8; // number of Bernoulli correction terms (capped at 8)
    double min_p_gap = 1e-6;      // minimum p-1 accepted by zeta-based quantities

    void validate() const {
        if (!(rel_tol > 0.0)) throw DomainError("PrecisionPolicy: rel_tol must be > 0");
        if (!(min_p_gap > 0.0)) throw DomainError("PrecisionPolicy: min_p_gap must be > 0");
        if (zeta_terms < 2) throw DomainError("PrecisionPolicy: zeta_terms must be >= 2");
        if (zeta_bernoulli_order < 1) throw DomainError("PrecisionPolicy: zeta_bernoulli_order must be >= 1");
    }
};

}  // namespace ctnorm
