#pragma once

#include <cstdint>
#include <random>

namespace ctnorm {

// Thin wrapper over mt19937_64 producing the same stream on every platform
// (std::uniform_*_distribution output is implementation-defined, so the
// mapping from raw 64-bit draws is done by hand).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace ctnorm
