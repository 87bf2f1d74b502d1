#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctnorm/exponent.hpp"
#include "ctnorm/report.hpp"
#include "ctnorm/verify.hpp"

namespace ctnorm::cli {

enum class Command { norm, bound, root, thresholds, table, classify, verify };

/// Fully parsed invocation. The front end in tools/ only maps flags here;
/// run() below does the work, so outputs are testable in-process.
struct RunConfig {
    Command command = Command::norm;
    std::int64_t n = 0;
    std::optional<double> p;
    std::optional<double> q;
    std::string which;           // bound kind or root name
    int table_id = 0;
    report::Format format = report::Format::text;
    std::string out_path;        // empty = write to `out`
    double tol_override = 0.0;   // table tolerance override (0 = defaults)
    bool use_oracle = false;     // norm: compute by brute-force summation instead
    VerifyOptions verify;        // seed / jobs / nmax / suites / policy
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches one command. Returns kExitOk on success,
/// kExitVerificationFailed when any verification or table row failed, and
/// kExitUsage on domain/usage errors (with a message on `err`). Never throws.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ctnorm::cli
