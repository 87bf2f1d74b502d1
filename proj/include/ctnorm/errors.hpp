#pragma once

#include <stdexcept>
#include <string>

namespace ctnorm {

// Argument outside a function's mathematical domain.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Matrix index outside [1, n]^2.
struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& msg) : std::out_of_range(msg) {}
};

// Request exceeds a hard size cap (e.g. the O(n^2) oracle).
struct SizeError : std::length_error {
    explicit SizeError(const std::string& msg) : std::length_error(msg) {}
};

// Iterative solver hit its iteration cap or lost its bracket.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A bracketed solve was requested where no sign change exists.
struct NoRootError : std::runtime_error {
    explicit NoRootError(const std::string& msg) : std::runtime_error(msg) {}
};

// Monotone integer search ran past its cap.
struct SearchOverflowError : std::runtime_error {
    explicit SearchOverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ctnorm
