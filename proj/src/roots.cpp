#include "ctnorm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "ctnorm/bounds.hpp"
#include "ctnorm/errors.hpp"
#include "ctnorm/norms.hpp"

namespace ctnorm {
namespace {

constexpr std::int64_t kSearchCap = 100000000;  // 10^8

}  // namespace

RootResult bisect(const std::function<double(double)>& f, double lo, double hi,
                  const BisectOptions& options) {
    if (!(lo < hi)) throw ConvergenceError("bisect: invalid bracket");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return RootResult{lo, lo, hi, 0.0, 0, true};
    if (fhi == 0.0) return RootResult{hi, lo, hi, 0.0, 0, true};
    if ((flo < 0.0) == (fhi < 0.0))
        throw ConvergenceError("bisect: no sign change over the bracket");

    int it = 0;
    for (; it < options.max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= options.x_abs_tol + options.x_rel_tol * std::abs(mid)) break;
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fm = f(mid);
        if (fm == 0.0) return RootResult{mid, lo, hi, 0.0, it + 1, true};
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    if (it >= options.max_iterations)
        throw ConvergenceError("bisect: iteration cap reached before the bracket collapsed");

    const double value = 0.5 * (lo + hi);
    return RootResult{value, lo, hi, f(value), it, true};
}

RootResult find_delta() {
    // delta_gap(1) = 2/3 > 0 > delta_gap(2) = -4/3.
    return bisect([](double p) { return delta_gap(p); }, 1.0, 2.0);
}

RootResult find_mu(const PrecisionPolicy& policy) {
    double lo = 1.0 + policy.min_p_gap;
    const double hi = 3.0;
    // mu_gap -> +inf as p -> 1+, so walk the left edge toward 1 until it is
    // positive (relaxing the zeta guard to match).
    PrecisionPolicy relaxed = policy;
    auto gap_at = [&](double p) {
        relaxed.min_p_gap = std::min(policy.min_p_gap, 0.5 * (p - 1.0));
        return mu_gap(p, relaxed);
    };
    int expansions = 0;
    while (gap_at(lo) <= 0.0) {
        lo = 1.0 + 0.25 * (lo - 1.0);
        if (++expansions > 60)
            throw ConvergenceError("find_mu: could not find a positive left edge");
    }
    return bisect([&](double p) { return gap_at(p); }, lo, hi);
}

namespace {

double delta_p_equation_residual(double p, double q) {
    // log of both sides of 2^{-p}((1+3^{-p})^{q/p}+2^{q/p})^p = 2^{pq}(2^p-1)^{-q},
    // with 2^{q/p} factored out of the inner sum so large q stays finite.
    const double ln2 = 0.6931471805599453094;
    const double r = 0.5 * (1.0 + std::pow(3.0, -p));
    const double log_lhs = (q - p) * ln2 + p * std::log1p(std::pow(r, q / p));
    const double log_rhs = p * q * ln2 - q * std::log(std::pow(2.0, p) - 1.0);
    return std::expm1(log_lhs - log_rhs);
}

}  // namespace

RootResult find_delta_p(double p) {
    const double delta = find_delta().value;
    if (std::isnan(p) || !(p > 1.0) || !(p < delta))
        throw DomainError("find_delta_p: requires 1 < p < delta = 1.40485...");

    const double target = conjecture_lower_constant(p);
    auto gap = [&](double q) { return lpq_statistic(2, p, q) - target; };

    // The statistic increases in q toward the limit 2^{1+1/p} > target, and
    // sits below the target at q = p; expand the upper edge until it crosses.
    double lo = p;
    double hi = std::max(2.0 * p, p + 1.0);
    while (gap(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw ConvergenceError("find_delta_p: no crossing found (p too close to delta?)");
    }
    RootResult root = bisect(gap, lo, hi);
    root.residual = delta_p_equation_residual(p, root.value);
    return root;
}

namespace {

// Largest n with stat(n) <= bound, for a strictly increasing statistic whose
// limit exceeds the bound. Exponential growth then binary search.
std::int64_t largest_order_below(const std::function<double(std::int64_t)>& stat, double bound) {
    if (stat(1) > bound) return 0;
    std::int64_t lo = 1, hi = 2;
    while (stat(hi) <= bound) {
        lo = hi;
        if (hi > kSearchCap / 2)
            throw SearchOverflowError("threshold search passed 10^8 (p too close to mu)");
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (stat(mid) <= bound ? lo : hi) = mid;
    }
    return lo;
}

void require_threshold_domain(double p, const PrecisionPolicy& policy) {
    const double mu = find_mu(policy).value;
    if (std::isnan(p) || !(p > 1.0 + policy.min_p_gap) || !(p < mu))
        throw DomainError("thresholds: require 1 + min_p_gap < p < mu = 1.6181...");
}

}  // namespace

ThresholdPair find_thresholds(double p, const PrecisionPolicy& policy) {
    require_threshold_domain(p, policy);
    const double bound = conjecture_upper_constant(p);
    const std::int64_t n1 =
        largest_order_below([&](std::int64_t n) { return lp_statistic(n, p); }, bound);
    const std::int64_t n2 =
        largest_order_below([&](std::int64_t n) { return lp1_statistic(n, p); }, bound);
    return ThresholdPair{p, n1, n2};
}

ThresholdPair ThresholdCache::get(double p) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(p); it != cache_.end()) return it->second;
    }
    const ThresholdPair pair = find_thresholds(p, policy_);
    std::unique_lock lock(mutex_);
    return cache_.emplace(p, pair).first->second;
}

RootResult find_eta(double p, std::int64_t n, const PrecisionPolicy& policy) {
    require_threshold_domain(p, policy);
    const double bound = conjecture_upper_constant(p);
    // The window n1 < n <= n2 is equivalent to these two monotone comparisons.
    if (!(lp_statistic(n, p) > bound))
        throw DomainError("find_eta: n <= N1 for this p (no crossing in q)");
    if (!(lp1_statistic(n, p) <= bound))
        throw DomainError("find_eta: n > N2 for this p (no crossing in q)");
    return bisect([&](double q) { return lpq_statistic(n, p, q) - bound; }, 1.0, p);
}

EpsilonThreshold bozkurt_lower_threshold(std::int64_t n, const PrecisionPolicy& policy) {
    if (n < 1) throw DomainError("bozkurt_lower_threshold: requires n >= 1");
    auto gap = [&](double p) { return bozkurt_bounds(p, policy).lower - lp_statistic(n, p); };

    const double lo = 1.0 + policy.min_p_gap;
    const double hi = 2.0;
    if (gap(lo) <= 0.0)
        throw NoRootError("bozkurt_lower_threshold: lower bound already holds at p = 1 + min_p_gap");
    if (gap(hi) >= 0.0)
        throw NoRootError("bozkurt_lower_threshold: no crossing in (1, 2]; the lower bound fails throughout");

    EpsilonThreshold out{bisect(gap, lo, hi), 0};

    double prev = gap(lo);
    for (double p = lo + 1e-3; p < hi + 0.5e-3; p += 1e-3) {
        const double g = gap(std::min(p, hi));
        if ((g < 0.0) != (prev < 0.0)) ++out.scan_sign_changes;
        prev = g;
    }
    return out;
}

const char* to_string(Prediction p) {
    switch (p) {
        case Prediction::holds: return "holds";
        case Prediction::opposite: return "opposite";
        default: return "boundary";
    }
}

RegionVerdict classify_region(std::int64_t n, Exponent p, Exponent q,
                              const PrecisionPolicy& policy) {
    if (n < 1) throw DomainError("classify_region: requires n >= 1");
    const double pv = p.value();
    const double qv = q.value();

    RegionVerdict verdict;
    verdict.n = n;
    verdict.p = pv;
    verdict.q = qv;

    const bool lower_side = pv < qv;
    verdict.constant = lower_side ? conjecture_lower_constant(pv) : conjecture_upper_constant(pv);
    verdict.statistic = lpq_statistic(n, p, q);

    if (lower_side) {
        // statistic >= lower constant; p is finite here since p < q <= inf.
        if (n >= 3) {
            verdict.predicted = Prediction::holds;
            verdict.case_label = "lower n>=3";
        } else if (n == 1) {
            verdict.predicted = Prediction::opposite;
            verdict.case_label = "lower n=1";
        } else if (pv == 1.0) {
            verdict.predicted = Prediction::opposite;
            verdict.case_label = "lower n=2 p=1";
        } else {
            const double delta = find_delta().value;
            if (pv >= delta) {
                verdict.predicted = Prediction::holds;
                verdict.case_label = "lower n=2 p>=delta";
            } else {
                const double delta_p = find_delta_p(pv).value;
                if (qv >= delta_p) {
                    verdict.predicted = Prediction::holds;
                    verdict.case_label = "lower n=2 q>=delta_p";
                } else {
                    verdict.predicted = Prediction::opposite;
                    verdict.case_label = "lower n=2 q<delta_p";
                }
            }
        }
    } else {
        // statistic < upper constant.
        if (pv == 1.0) {
            verdict.predicted = n <= 7 ? Prediction::holds : Prediction::opposite;
            verdict.case_label = n <= 7 ? "upper p=1 n<=7" : "upper p=1 n>=8";
        } else {
            const double mu = find_mu(policy).value;
            if (pv >= mu) {
                verdict.predicted = Prediction::holds;
                verdict.case_label = "upper p>=mu";
            } else if (lp_statistic(n, p) <= verdict.constant) {
                // Monotonicity in n makes this equivalent to n <= N1.
                verdict.predicted = Prediction::holds;
                verdict.case_label = "upper n<=N1";
            } else if (lp1_statistic(n, p) > verdict.constant) {
                verdict.predicted = Prediction::opposite;
                verdict.case_label = "upper n>N2";
            } else {
                const double eta = find_eta(pv, n, policy).value;
                if (qv < eta) {
                    verdict.predicted = Prediction::holds;
                    verdict.case_label = "upper window q<eta";
                } else {
                    verdict.predicted = Prediction::opposite;
                    verdict.case_label = "upper window q>=eta";
                }
            }
        }
    }

    const double band = 1e-9 * std::max(1.0, std::abs(verdict.constant));
    if (std::abs(verdict.statistic - verdict.constant) <= band) {
        verdict.observed = Prediction::boundary;
        verdict.agree = true;
    } else if (lower_side) {
        verdict.observed =
            verdict.statistic >= verdict.constant ? Prediction::holds : Prediction::opposite;
        verdict.agree = verdict.observed == verdict.predicted;
    } else {
        verdict.observed =
            verdict.statistic < verdict.constant ? Prediction::holds : Prediction::opposite;
        verdict.agree = verdict.observed == verdict.predicted;
    }
    return verdict;
}

}  // namespace ctnorm
