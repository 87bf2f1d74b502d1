#include "ctnorm/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include "ctnorm/bounds.hpp"
#include "ctnorm/errors.hpp"
#include "ctnorm/norms.hpp"
#include "ctnorm/roots.hpp"
#include "ctnorm/tables.hpp"

namespace ctnorm::cli {
namespace {

using report::Report;
using report::Value;

const char* kind_name(NormKind k) {
    switch (k) {
        case NormKind::lp: return "lp";
        case NormKind::lp1: return "lp1";
        default: return "lpq";
    }
}

Value opt_num(const std::optional<double>& v) {
    if (!v) return Value{std::monostate{}};
    return Value{*v};
}

double required_p(const RunConfig& c) {
    if (!c.p) throw DomainError("missing --p");
    return *c.p;
}

std::int64_t required_n(const RunConfig& c) {
    if (c.n <= 0) throw DomainError("missing or nonpositive --n");
    return c.n;
}

Report root_report(const std::string& name, const RootResult& r) {
    Report rep;
    rep.columns = {"root", "value", "bracket_lo", "bracket_hi", "residual", "iterations", "converged"};
    rep.rows.push_back({Value{name}, Value{r.value}, Value{r.lo}, Value{r.hi}, Value{r.residual},
                        Value{static_cast<std::int64_t>(r.iterations)}, Value{r.converged}});
    return rep;
}

int do_norm(const RunConfig& c, Report& rep) {
    const std::int64_t n = required_n(c);
    const Exponent p(required_p(c));
    NormValue v = [&] {
        if (c.use_oracle) return c.q ? oracle_norm(n, p, Exponent(*c.q)) : oracle_norm(n, p);
        return c.q ? norm_pq(n, p, Exponent(*c.q)) : norm_p(n, p);
    }();
    rep.columns = {"kind", "n", "p", "q", "value"};
    rep.rows.push_back({Value{std::string(kind_name(v.kind))}, Value{v.n}, Value{v.p},
                        opt_num(v.q), Value{v.value}});
    return kExitOk;
}

int do_bound(const RunConfig& c, Report& rep) {
    if (c.which == "bozkurt" || c.which == "refined") {
        const double p = required_p(c);
        const std::int64_t n = required_n(c);
        const BoundReport r = c.which == "refined" ? refined_bounds(n, p, c.verify.policy)
                                                   : bozkurt_report(n, p, c.verify.policy);
        rep.columns = {"bound", "n", "p", "lower", "statistic", "upper", "vacuous", "contained"};
        rep.rows.push_back({Value{c.which}, Value{r.n}, Value{r.p}, opt_num(r.lower),
                            Value{r.statistic}, opt_num(r.upper), Value{r.vacuous},
                            Value{r.contained}});
        return r.contained ? kExitOk : kExitVerificationFailed;
    }
    if (c.which == "conjecture") {
        const double p = required_p(c);
        rep.columns = {"bound", "p", "lower_constant", "upper_constant"};
        rep.rows.push_back({Value{c.which}, Value{p}, Value{conjecture_lower_constant(p)},
                            Value{conjecture_upper_constant(p)}});
        return kExitOk;
    }
    throw DomainError("unknown bound '" + c.which + "' (expected bozkurt, refined or conjecture)");
}

int do_root(const RunConfig& c, Report& rep) {
    if (c.which == "delta") {
        rep = root_report("delta", find_delta());
        return kExitOk;
    }
    if (c.which == "mu") {
        rep = root_report("mu", find_mu(c.verify.policy));
        return kExitOk;
    }
    if (c.which == "delta_p") {
        rep = root_report("delta_p", find_delta_p(required_p(c)));
        rep.rows[0].insert(rep.rows[0].begin() + 1, Value{required_p(c)});
        rep.columns.insert(rep.columns.begin() + 1, "p");
        return kExitOk;
    }
    if (c.which == "eta") {
        rep = root_report("eta", find_eta(required_p(c), required_n(c), c.verify.policy));
        rep.columns.insert(rep.columns.begin() + 1, "p");
        rep.columns.insert(rep.columns.begin() + 2, "n");
        rep.rows[0].insert(rep.rows[0].begin() + 1, Value{required_p(c)});
        rep.rows[0].insert(rep.rows[0].begin() + 2, Value{required_n(c)});
        return kExitOk;
    }
    if (c.which == "epsilon") {
        const auto eps = bozkurt_lower_threshold(required_n(c), c.verify.policy);
        rep = root_report("epsilon", eps.root);
        rep.columns.insert(rep.columns.begin() + 1, "n");
        rep.rows[0].insert(rep.rows[0].begin() + 1, Value{required_n(c)});
        rep.columns.push_back("scan_sign_changes");
        rep.rows[0].push_back(Value{static_cast<std::int64_t>(eps.scan_sign_changes)});
        return kExitOk;
    }
    throw DomainError("unknown root '" + c.which +
                      "' (expected delta, mu, delta_p, eta or epsilon)");
}

int do_thresholds(const RunConfig& c, Report& rep) {
    const auto t = find_thresholds(required_p(c), c.verify.policy);
    rep.columns = {"p", "n1", "n2"};
    rep.rows.push_back({Value{t.p}, Value{t.n1}, Value{t.n2}});
    return kExitOk;
}

int do_table(const RunConfig& c, Report& rep) {
    const auto artifact = reproduce_table(c.table_id, c.verify.policy, c.tol_override);
    rep.columns = {"table", "p", "n", "quantity", "computed", "reference", "abs_diff",
                   "tolerance", "pass", "error"};
    for (const auto& row : artifact.rows) {
        if (!row.error.empty()) {
            rep.rows.push_back({Value{static_cast<std::int64_t>(artifact.table_id)}, Value{row.p},
                                row.n >= 0 ? Value{row.n} : Value{std::monostate{}},
                                Value{std::monostate{}}, Value{std::monostate{}},
                                Value{std::monostate{}}, Value{std::monostate{}},
                                Value{std::monostate{}}, Value{false}, Value{row.error}});
            continue;
        }
        for (const auto& check : row.checks)
            rep.rows.push_back({Value{static_cast<std::int64_t>(artifact.table_id)}, Value{row.p},
                                row.n >= 0 ? Value{row.n} : Value{std::monostate{}},
                                Value{check.label}, Value{check.computed}, Value{check.reference},
                                Value{std::abs(check.computed - check.reference)},
                                Value{check.tolerance}, Value{check.pass},
                                Value{std::monostate{}}});
    }
    return artifact.all_pass ? kExitOk : kExitVerificationFailed;
}

int do_classify(const RunConfig& c, Report& rep) {
    if (!c.q) throw DomainError("missing --q");
    const auto v = classify_region(required_n(c), Exponent(required_p(c)), Exponent(*c.q),
                                   c.verify.policy);
    rep.columns = {"n", "p", "q", "predicted", "case", "observed", "statistic", "constant", "agree"};
    rep.rows.push_back({Value{v.n}, Value{v.p}, Value{v.q}, Value{std::string(to_string(v.predicted))},
                        Value{v.case_label}, Value{std::string(to_string(v.observed))},
                        Value{v.statistic}, Value{v.constant}, Value{v.agree}});
    return v.agree ? kExitOk : kExitVerificationFailed;
}

int do_verify(const RunConfig& c, Report& rep) {
    const auto result = verify_all(c.verify);
    rep.columns = {"suite", "checks", "failures", "witnesses"};
    for (const auto& s : result.suites) {
        std::string joined;
        for (const auto& w : s.witnesses) {
            if (!joined.empty()) joined += "; ";
            joined += w;
        }
        rep.rows.push_back({Value{s.name}, Value{s.checks}, Value{s.failures},
                            joined.empty() ? Value{std::monostate{}} : Value{joined}});
    }
    rep.rows.push_back({Value{std::string("total")}, Value{result.total_checks},
                        Value{result.total_failures}, Value{std::monostate{}}});
    return result.total_failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Report rep;
    int status = kExitOk;
    try {
        switch (config.command) {
            case Command::norm: status = do_norm(config, rep); break;
            case Command::bound: status = do_bound(config, rep); break;
            case Command::root: status = do_root(config, rep); break;
            case Command::thresholds: status = do_thresholds(config, rep); break;
            case Command::table: status = do_table(config, rep); break;
            case Command::classify: status = do_classify(config, rep); break;
            case Command::verify: status = do_verify(config, rep); break;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }

    const std::string text = report::render(rep, config.format);
    if (config.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(config.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << config.out_path << "' for writing\n";
            return kExitUsage;
        }
        file << text;
    }
    return status;
}

}  // namespace ctnorm::cli
