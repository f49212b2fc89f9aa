#pragma once

#include <stdexcept>
#include <string>

namespace minsky {

// Input outside the mathematical domain of an operation (e.g. Phillips
// inverse below its range, invalid initial state).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A denominator of the model vanished (nu - d, or 1 + eta2*alpha).
struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative root finding failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A scalar root find has no root on the admissible bracket.
struct NoRootError : std::runtime_error {
    explicit NoRootError(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-point debt diverges (original Keen model at zero productivity growth).
struct DivergentDebtError : std::runtime_error {
    explicit DivergentDebtError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration value; the message names the offending key.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minsky
