#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ctnorm/exponent.hpp"

namespace ctnorm {

/// Order of the Cauchy-Toeplitz matrix T_n with entries 2/(1+2(i-j)).
/// The matrix is never materialized; every denominator 1+2(i-j) is odd.
struct CTMatrixSpec {
    explicit CTMatrixSpec(std::int64_t order);
    std::int64_t n;
};

/// Entry a_ij = 2/(1+2(i-j)), 1-based. Negative iff i < j.
double entry(const CTMatrixSpec& spec, std::int64_t i, std::int64_t j);

/// Per-column sums of |a_ij|^p plus the index n0 = floor(n/2)+1 of the
/// maximal column. Built from one shared prefix table over odd reciprocal
/// powers, O(n) total.
struct ColumnPowerSums {
    std::int64_t n;
    double p;
    std::vector<double> sums;  // sums[j-1] = sum_i |a_ij|^p
    std::int64_t n0;           // argmax_j sums[j-1] (first index attaining the max)
};

ColumnPowerSums column_power_sums(std::int64_t n, Exponent p);

enum class NormKind { lp, lpq, lp1 };

struct NormValue {
    NormKind kind;
    std::int64_t n;
    double p;
    std::optional<double> q;  // present for lpq / lp1
    double value;
};

/// Entrywise lp norm via the closed form 2 [sum_k (2n-2k+1)/(2k-1)^p]^{1/p}.
NormValue norm_p(std::int64_t n, Exponent p);

/// Mixed l_{p,q} norm: q-norm over columns of the column p-norms.
/// q = inf takes the max column p-norm; p = inf reduces each column to its
/// max entry (always 2), giving 2 n^{1/q}; p = q reduces to norm_p.
NormValue norm_pq(std::int64_t n, Exponent p, Exponent q);

/// Brute-force norms by direct entry summation, for cross-validation only.
/// Capped at n <= 10^4 (O(n^2) cost); throws SizeError above the cap.
NormValue oracle_norm(std::int64_t n, Exponent p);
NormValue oracle_norm(std::int64_t n, Exponent p, Exponent q);

/// Shared limit of n^{-1/p} ||T_n||_p and n^{-1} ||T_n||_{p,1} as n -> inf:
/// 2^{1/p} [(2^p - 1) zeta(p)]^{1/p}.
double asymptote_p(double p, const PrecisionPolicy& policy = {});

/// Size-normalized statistics; evaluated in O(n) time and O(1) memory.
double lp_statistic(std::int64_t n, Exponent p);                 // n^{-1/p} ||T_n||_p
double lpq_statistic(std::int64_t n, Exponent p, Exponent q);    // n^{-1/q} ||T_n||_{p,q}
double lp1_statistic(std::int64_t n, Exponent p);                // n^{-1} ||T_n||_{p,1}

/// Calls fn(n, lp_statistic(n, p)) for n = 1..n_max with O(1) work per step.
void lp_statistic_sweep(std::int64_t n_max, Exponent p,
                        const std::function<void(std::int64_t, double)>& fn);

}  // namespace ctnorm
