#include "ctnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ctnorm/errors.hpp"
#include "ctnorm/kahan.hpp"
#include "ctnorm/special.hpp"

namespace ctnorm {
namespace {

constexpr std::int64_t kOracleCap = 10000;

double odd_power(std::int64_t m, double p) {
    // (2m-1)^{-p}; underflows to 0 for large p*log(m), which is harmless
    // since every column sum is bounded below by its leading term 1.
    return std::pow(static_cast<double>(2 * m - 1), -p);
}

void require_order(std::int64_t n) {
    if (n < 1) throw DomainError("matrix order must be >= 1, got " + std::to_string(n));
}

void require_finite(const Exponent& p, const char* where) {
    if (!p.is_finite()) throw DomainError(std::string(where) + ": exponent must be finite");
}

// Reduced column sums c_j = sum_i |a_ij|^p / 2^p = S[n-j+1] + S[j-1], where
// S[m] is the prefix sum of (2k-1)^{-p}. Streams left to right with two
// compensated accumulators instead of materializing the prefix table.
template <typename Fn>
void fold_reduced_column_sums(std::int64_t n, double p, Fn&& fn) {
    KahanSum high;  // S[n-j+1]
    for (std::int64_t m = 1; m <= n; ++m) high.add(odd_power(m, p));
    KahanSum low;   // S[j-1]
    for (std::int64_t j = 1; j <= n; ++j) {
        fn(j, high.value() + low.value());
        high.add(-odd_power(n - j + 1, p));
        low.add(odd_power(j, p));
    }
}

// Reduced sum of the maximal column (j = n0): S[n-n0+1] + S[n0-1].
double reduced_max_column_sum(std::int64_t n, double p) {
    const std::int64_t n0 = n / 2 + 1;
    const std::int64_t a = n - n0 + 1;
    const std::int64_t b = n0 - 1;
    KahanSum s;
    double at_a = 0.0, at_b = 0.0;
    for (std::int64_t m = 1; m <= std::max(a, b); ++m) {
        s.add(odd_power(m, p));
        if (m == a) at_a = s.value();
        if (m == b) at_b = s.value();
    }
    return at_a + at_b;  // b may be 0 (n = 1), leaving at_b = 0
}

double abs_entry(std::int64_t i, std::int64_t j) {
    return std::abs(2.0 / static_cast<double>(1 + 2 * (i - j)));
}

}  // namespace

CTMatrixSpec::CTMatrixSpec(std::int64_t order) : n(order) { require_order(order); }

double entry(const CTMatrixSpec& spec, std::int64_t i, std::int64_t j) {
    if (i < 1 || i > spec.n || j < 1 || j > spec.n)
        throw IndexError("entry: index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") outside [1," + std::to_string(spec.n) + "]^2");
    return 2.0 / static_cast<double>(1 + 2 * (i - j));
}

ColumnPowerSums column_power_sums(std::int64_t n, Exponent p) {
    require_order(n);
    require_finite(p, "column_power_sums");
    const double pv = p.value();

    // prefix[k] = S[k] = sum_{m=1..k} (2m-1)^{-p}
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
    KahanSum acc;
    for (std::int64_t k = 1; k <= n; ++k) {
        acc.add(odd_power(k, pv));
        prefix[static_cast<std::size_t>(k)] = acc.value();
    }

    const double scale = std::pow(2.0, pv);
    std::vector<double> sums(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j)
        sums[static_cast<std::size_t>(j - 1)] =
            scale * (prefix[static_cast<std::size_t>(n - j + 1)] + prefix[static_cast<std::size_t>(j - 1)]);

    return ColumnPowerSums{n, pv, std::move(sums), n / 2 + 1};
}

NormValue norm_p(std::int64_t n, Exponent p) {
    require_order(n);
    require_finite(p, "norm_p");
    const double pv = p.value();
    KahanSum a;  // sum_k (2n-2k+1) (2k-1)^{-p}
    for (std::int64_t k = 1; k <= n; ++k)
        a.add(static_cast<double>(2 * (n - k) + 1) * odd_power(k, pv));
    return NormValue{NormKind::lp, n, pv, std::nullopt, 2.0 * std::pow(a.value(), 1.0 / pv)};
}

NormValue norm_pq(std::int64_t n, Exponent p, Exponent q) {
    require_order(n);
    const double pv = p.value();
    const double qv = q.value();
    const NormKind kind = (q.is_finite() && qv == 1.0) ? NormKind::lp1 : NormKind::lpq;

    if (!p.is_finite()) {
        // Every column's max entry is the diagonal 2.
        const double value = q.is_finite() ? 2.0 * std::pow(static_cast<double>(n), 1.0 / qv) : 2.0;
        return NormValue{kind, n, pv, qv, value};
    }
    if (p == q) return NormValue{kind, n, pv, qv, norm_p(n, p).value};

    if (!q.is_finite()) {
        const double value = 2.0 * std::pow(reduced_max_column_sum(n, pv), 1.0 / pv);
        return NormValue{kind, n, pv, qv, value};
    }

    // 2 M^{1/p} [sum_j (c_j / M)^{q/p}]^{1/q} with M the maximal reduced
    // column sum, so the powers stay in (0, 1] for arbitrarily large q.
    const double max_col = reduced_max_column_sum(n, pv);
    const double ratio = qv / pv;
    KahanSum total;
    fold_reduced_column_sums(n, pv, [&](std::int64_t, double c) {
        total.add(std::pow(c / max_col, ratio));
    });
    const double value = 2.0 * std::pow(max_col, 1.0 / pv) * std::pow(total.value(), 1.0 / qv);
    return NormValue{kind, n, pv, qv, value};
}

NormValue oracle_norm(std::int64_t n, Exponent p) {
    require_order(n);
    if (n > kOracleCap) throw SizeError("oracle_norm: n exceeds the O(n^2) cap of 10^4");
    const double pv = p.value();
    if (!p.is_finite()) return NormValue{NormKind::lp, n, pv, std::nullopt, 2.0};
    KahanSum total;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 1; j <= n; ++j) total.add(std::pow(abs_entry(i, j), pv));
    return NormValue{NormKind::lp, n, pv, std::nullopt, std::pow(total.value(), 1.0 / pv)};
}

NormValue oracle_norm(std::int64_t n, Exponent p, Exponent q) {
    require_order(n);
    if (n > kOracleCap) throw SizeError("oracle_norm: n exceeds the O(n^2) cap of 10^4");
    const double pv = p.value();
    const double qv = q.value();
    const NormKind kind = (q.is_finite() && qv == 1.0) ? NormKind::lp1 : NormKind::lpq;

    KahanSum outer;
    double outer_max = 0.0;
    for (std::int64_t j = 1; j <= n; ++j) {
        double column;  // sum_i |a_ij|^p, or max_i |a_ij| at p = inf
        if (p.is_finite()) {
            KahanSum inner;
            for (std::int64_t i = 1; i <= n; ++i) inner.add(std::pow(abs_entry(i, j), pv));
            column = inner.value();
        } else {
            column = 0.0;
            for (std::int64_t i = 1; i <= n; ++i) column = std::max(column, abs_entry(i, j));
        }
        const double col_norm = p.is_finite() ? std::pow(column, 1.0 / pv) : column;
        if (q.is_finite())
            outer.add(std::pow(col_norm, qv));
        else
            outer_max = std::max(outer_max, col_norm);
    }
    const double value = q.is_finite() ? std::pow(outer.value(), 1.0 / qv) : outer_max;
    return NormValue{kind, n, pv, qv, value};
}

double asymptote_p(double p, const PrecisionPolicy& policy) {
    // 2^{1/p} [(2^p-1) zeta(p)]^{1/p} = 2^{1+1/p} lambda(p)^{1/p}; the second
    // form avoids overflow of 2^p for extreme p.
    const double lambda = odd_lambda(p, policy);  // enforces the min_p_gap guard
    return std::pow(2.0, 1.0 + 1.0 / p) * std::pow(lambda, 1.0 / p);
}

double lp_statistic(std::int64_t n, Exponent p) {
    require_order(n);
    require_finite(p, "lp_statistic");
    const double pv = p.value();
    KahanSum a;
    for (std::int64_t k = 1; k <= n; ++k)
        a.add(static_cast<double>(2 * (n - k) + 1) * odd_power(k, pv));
    return 2.0 * std::pow(a.value() / static_cast<double>(n), 1.0 / pv);
}

double lpq_statistic(std::int64_t n, Exponent p, Exponent q) {
    require_order(n);
    const double pv = p.value();
    const double qv = q.value();
    if (!p.is_finite()) return 2.0;  // 2 n^{1/q} / n^{1/q}
    if (!q.is_finite()) return 2.0 * std::pow(reduced_max_column_sum(n, pv), 1.0 / pv);

    const double max_col = reduced_max_column_sum(n, pv);
    const double ratio = qv / pv;
    KahanSum total;
    fold_reduced_column_sums(n, pv, [&](std::int64_t, double c) {
        total.add(std::pow(c / max_col, ratio));
    });
    return 2.0 * std::pow(max_col, 1.0 / pv) *
           std::pow(total.value() / static_cast<double>(n), 1.0 / qv);
}

double lp1_statistic(std::int64_t n, Exponent p) {
    return lpq_statistic(n, p, Exponent(1.0));
}

void lp_statistic_sweep(std::int64_t n_max, Exponent p,
                        const std::function<void(std::int64_t, double)>& fn) {
    require_order(n_max);
    require_finite(p, "lp_statistic_sweep");
    const double pv = p.value();
    // ||T_n||_p^p / 2^p = (2n+1) U_n - V_n with U_n = sum (2k-1)^{-p} and
    // V_n = sum 2k (2k-1)^{-p}; both update in O(1) per step.
    KahanSum u, v;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double t = odd_power(n, pv);
        u.add(t);
        v.add(2.0 * static_cast<double>(n) * t);
        const double a = static_cast<double>(2 * n + 1) * u.value() - v.value();
        fn(n, 2.0 * std::pow(a / static_cast<double>(n), 1.0 / pv));
    }
}

}  // namespace ctnorm
