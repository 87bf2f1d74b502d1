#include "ctnorm/bounds.hpp"

#include <cmath>

#include "ctnorm/errors.hpp"
#include "ctnorm/norms.hpp"
#include "ctnorm/special.hpp"

namespace ctnorm {
namespace {

constexpr double kContainSlack = 1e-13;

bool below(double a, double b) { return a <= b * (1.0 + kContainSlack) + kContainSlack; }

}  // namespace

BozkurtBounds bozkurt_bounds(double p, const PrecisionPolicy& policy) {
    const double lower = std::pow((std::pow(2.0, p) - 1.0) * zeta(p, policy), 1.0 / p);
    return BozkurtBounds{lower, std::pow(2.0, 1.0 / p) * lower};
}

RefinedCorrections refined_corrections(std::int64_t n, double p) {
    if (n < 2) throw DomainError("refined_corrections: requires n >= 2");
    const double nd = static_cast<double>(n);
    const double lower = (nd * nd + 2.0) / ((p - 1.0) * std::pow(nd, p + 1.0)) +
                         std::pow(2.0, p + 1.0) / (nd * std::pow(2.0 * nd - 1.0, p));
    const double upper = std::pow(2.0, p - 1.0) / ((p - 1.0) * std::pow(2.0 * nd + 1.0, p - 1.0));
    return RefinedCorrections{lower, upper};
}

BoundReport refined_bounds(std::int64_t n, double p, const PrecisionPolicy& policy) {
    if (n < 2) throw DomainError("refined_bounds: requires n >= 2");
    const double zp = (std::pow(2.0, p) - 1.0) * zeta(p, policy);  // guards p near 1
    const auto corr = refined_corrections(n, p);
    const double nd = static_cast<double>(n);

    BoundReport report;
    report.n = n;
    report.p = p;
    report.statistic = lp_statistic(n, p);
    report.upper = std::pow(2.0 - 1.0 / nd, 1.0 / p) * std::pow(zp - corr.upper_correction, 1.0 / p);

    const double lower_radicand = (1.0 + 2.0 / (nd * nd)) * zp - corr.lower_correction;
    if (lower_radicand > 0.0) {
        report.lower = std::pow(lower_radicand, 1.0 / p);
    } else {
        report.vacuous = true;  // hypothesis p > 1 is met but the bound says nothing
    }
    report.contained = (!report.lower || below(*report.lower, report.statistic)) &&
                       below(report.statistic, *report.upper);
    return report;
}

BoundReport bozkurt_report(std::int64_t n, double p, const PrecisionPolicy& policy) {
    const auto b = bozkurt_bounds(p, policy);
    BoundReport report;
    report.n = n;
    report.p = p;
    report.statistic = lp_statistic(n, p);
    report.lower = b.lower;
    report.upper = b.upper;
    report.lower_strict = false;
    report.contained = below(b.lower, report.statistic) && below(report.statistic, b.upper);
    return report;
}

double conjecture_upper_constant(double p) {
    if (std::isnan(p) || p < 1.0) throw DomainError("conjecture_upper_constant: requires p >= 1");
    if (std::isinf(p)) return 4.0;
    return 4.0 * std::pow(0.5 + 1.0 / (std::pow(2.0, p) - 1.0), 1.0 / p);
}

double conjecture_lower_constant(double p) {
    if (std::isnan(p) || p < 1.0) throw DomainError("conjecture_lower_constant: requires p >= 1");
    if (std::isinf(p)) return 2.0;
    return 4.0 * std::pow(std::pow(2.0, p) - 1.0, -1.0 / p);
}

double delta_gap(double p) {
    return 3.0 - std::pow(2.0, p) + std::pow(3.0, -p) - std::pow(2.0 / 3.0, p);
}

double mu_gap(double p, const PrecisionPolicy& policy) {
    return odd_lambda(p, policy) -
           std::pow(2.0, p - 1.0) * (0.5 + 1.0 / (std::pow(2.0, p) - 1.0));
}

double order3_margin(double p) {
    return std::pow(2.0, p + 1.0) - 5.0 + 3.0 * std::pow(2.0 / 3.0, p) + std::pow(0.4, p) -
           std::pow(3.0, 1.0 - p) - std::pow(5.0, -p);
}

double order7_margin(double p) {
    const double two_p = std::pow(2.0, p);
    return 7.0 * std::pow(2.0, p - 1.0) + 7.0 * two_p / (two_p - 1.0) - 13.0 -
           11.0 * std::pow(3.0, -p) - 9.0 * std::pow(5.0, -p) - std::pow(7.0, 1.0 - p) -
           5.0 * std::pow(9.0, -p) - 3.0 * std::pow(11.0, -p) - std::pow(13.0, -p);
}

}  // namespace ctnorm
