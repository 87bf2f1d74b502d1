#include "ctnorm/special.hpp"

#include <algorithm>
#include <cmath>

#include "ctnorm/errors.hpp"
#include "ctnorm/kahan.hpp"

namespace ctnorm {
namespace {

// B_{2j} / (2j)! for j = 1..8.
constexpr double kBernoulliOverFactorial[] = {
    8.3333333333333333e-02,   // 1/12
    -1.3888888888888889e-03,  // -1/720
    3.3068783068783069e-05,   // 1/30240
    -8.2671957671957672e-07,  // -1/1209600
    2.0876756987868099e-08,   // 1/47900160
    -5.2841901386874933e-10,  // -691/1307674368000
    1.3382536530684679e-11,   // 7/523069747200
    -3.3896802963225829e-13,  // -3617/10670678046720000
};
constexpr int kMaxBernoulliOrder =
    static_cast<int>(sizeof(kBernoulliOverFactorial) / sizeof(double));

}  // namespace

double zeta(double p, const PrecisionPolicy& policy) {
    policy.validate();
    if (std::isnan(p) || !(p >= 1.0 + policy.min_p_gap))
        throw DomainError("zeta: requires p >= 1 + min_p_gap (zeta-based bounds diverge as p -> 1+)");

    const int cutoff = std::max(2, policy.zeta_terms);
    KahanSum direct;
    for (int k = 1; k < cutoff; ++k) direct.add(std::pow(static_cast<double>(k), -p));

    const double nd = static_cast<double>(cutoff);
    const double tail = std::pow(nd, 1.0 - p) / (p - 1.0) + 0.5 * std::pow(nd, -p);

    const int order = std::min(policy.zeta_bernoulli_order, kMaxBernoulliOrder);
    double rising = p;                      // p (p+1) ... (p+2j-2)
    double power = std::pow(nd, -p - 1.0);  // nd^{-(p+2j-1)}
    KahanSum corrections;
    for (int j = 0; j < order; ++j) {
        corrections.add(kBernoulliOverFactorial[j] * rising * power);
        rising *= (p + 2.0 * j + 1.0) * (p + 2.0 * j + 2.0);
        power /= nd * nd;
    }
    return direct.value() + tail + corrections.value();
}

double odd_lambda(double p, const PrecisionPolicy& policy) {
    return (1.0 - std::pow(2.0, -p)) * zeta(p, policy);
}

double power_mean(double r, std::span<const double> xs) {
    if (xs.empty()) throw DomainError("power_mean: empty input");
    for (double x : xs)
        if (std::isnan(x) || !(x > 0.0))
            throw DomainError("power_mean: entries must be positive");
    if (std::isnan(r)) throw DomainError("power_mean: order must not be NaN");

    if (std::isinf(r))
        return r > 0.0 ? *std::max_element(xs.begin(), xs.end())
                       : *std::min_element(xs.begin(), xs.end());

    const double count = static_cast<double>(xs.size());
    if (r == 0.0) {
        KahanSum logs;
        for (double x : xs) logs.add(std::log(x));
        return std::exp(logs.value() / count);
    }

    // Scale by the extreme entry so every power stays in (0, 1].
    const double scale = r > 0.0 ? *std::max_element(xs.begin(), xs.end())
                                 : *std::min_element(xs.begin(), xs.end());
    KahanSum powers;
    for (double x : xs) powers.add(std::pow(x / scale, r));
    return scale * std::pow(powers.value() / count, 1.0 / r);
}

}  // namespace ctnorm
