#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctnorm/exponent.hpp"

namespace ctnorm {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int jobs = 0;                   // 0 = one worker per hardware thread
    std::int64_t nmax = 0;          // 0 = suite defaults; otherwise caps grid sizes
    int oracle_cells = 200;
    int region_cells = 10000;
    std::vector<std::string> suites;  // empty = all; unknown names throw DomainError
    PrecisionPolicy policy;
};

struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::vector<std::string> witnesses;  // capped; inputs and both sides per failure
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    std::int64_t total_checks = 0;
    std::int64_t total_failures = 0;
};

const std::vector<std::string>& verify_suite_names();

/// Runs the requested property suites (oracle equivalence, monotonicity,
/// sandwich containment, sign patterns, crossover behavior, region
/// agreement, golden tables). Deterministic for a fixed seed: each suite
/// derives its own generator from the seed, so filtering suites or changing
/// the worker count never changes any outcome.
VerifyReport verify_all(const VerifyOptions& options = {});

}  // namespace ctnorm
