#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <shared_mutex>
#include <string>

#include "ctnorm/exponent.hpp"

namespace ctnorm {

/// Result of a bracketed scalar solve. The final bracket still straddles the
/// sign change: lo < value < hi with f(lo) and f(hi) of opposite signs.
struct RootResult {
    double value;
    double lo;
    double hi;
    double residual;
    int iterations;
    bool converged;
};

struct BisectOptions {
    int max_iterations = 200;
    double x_rel_tol = 4e-16;
    double x_abs_tol = 0.0;
};

/// Plain bisection on a bracketing interval; every equation solved here is
/// strictly monotone, so no derivative machinery is used. Throws
/// ConvergenceError when the bracket is invalid or the cap is hit.
RootResult bisect(const std::function<double(double)>& f, double lo, double hi,
                  const BisectOptions& options = {});

/// delta = 1.40485...: root of 2^d + 6^d = 3^{d+1} + 1, bracketed in [1, 2].
RootResult find_delta();

/// mu = 1.6181...: root of (1 - 2^{-m}) zeta(m) = 2^{m-1}(1/2 + 1/(2^m - 1)).
RootResult find_mu(const PrecisionPolicy& policy = {});

/// delta_p for fixed p in (1, delta): the q > p at which 2^{-1/q} ||T_2||_{p,q}
/// meets 4 (2^p - 1)^{-1/p}. The stored residual is the relative defect of the
/// equivalent form 2^{-p}((1+3^{-p})^{q/p} + 2^{q/p})^p = 2^{pq} (2^p-1)^{-q}.
RootResult find_delta_p(double p);

/// Largest orders at which the normalized statistics stay at or below the
/// conjectured upper constant: n1 for n^{-1/p} ||T_n||_p, n2 for
/// n^{-1} ||T_n||_{p,1}. Requires 1 < p < mu; found by exponential bracket
/// growth plus binary search on the strictly increasing statistics.
struct ThresholdPair {
    double p;
    std::int64_t n1;
    std::int64_t n2;
};

ThresholdPair find_thresholds(double p, const PrecisionPolicy& policy = {});

/// Read-mostly memo of threshold searches keyed by p. Safe for concurrent
/// readers; assumes one policy per cache instance.
class ThresholdCache {
public:
    explicit ThresholdCache(PrecisionPolicy policy = {}) : policy_(policy) {}
    ThresholdPair get(double p) const;

private:
    PrecisionPolicy policy_;
    mutable std::shared_mutex mutex_;
    mutable std::map<double, ThresholdPair> cache_;
};

/// eta_{p,n} for 1 < p < mu and n1 < n <= n2: the q in (1, p) at which
/// n^{-1/q} ||T_n||_{p,q} meets the conjectured upper constant.
RootResult find_eta(double p, std::int64_t n, const PrecisionPolicy& policy = {});

/// Root in p of [(2^p-1) zeta(p)]^{1/p} = n^{-1/p} ||T_n||_p on (1, 2]: the
/// crossover below which the classical lower bound fails for this n. Also
/// scans the interval at 1e-3 resolution and reports the number of sign
/// changes seen (uniqueness is not taken for granted).
struct EpsilonThreshold {
    RootResult root;
    int scan_sign_changes;
};

EpsilonThreshold bozkurt_lower_threshold(std::int64_t n, const PrecisionPolicy& policy = {});

/// Which side of the conjectured inequality a given (n, p, q) falls on.
enum class Prediction { holds, opposite, boundary };

struct RegionVerdict {
    std::int64_t n;
    double p;
    double q;
    Prediction predicted;
    std::string case_label;
    Prediction observed;
    double statistic;  // n^{-1/q} ||T_n||_{p,q}
    double constant;   // the conjectured constant being compared against
    bool agree;
};

const char* to_string(Prediction p);

/// Case analysis of the conjectured bound: for p < q the lower inequality
/// (statistic >= lower constant), for q <= p the upper one (statistic <
/// upper constant). The predicted side follows the crossover constants
/// (delta, delta_p, mu, the threshold window and eta); the observed side is
/// computed directly from the norm. Within a 1e-9 band around equality the
/// observed side reports "boundary" and agreement is not required.
RegionVerdict classify_region(std::int64_t n, Exponent p, Exponent q,
                              const PrecisionPolicy& policy = {});

}  // namespace ctnorm
