#pragma once

#include <stdexcept>
#include <string>

namespace znt {

// Thrown when an argument is outside the validated domain of a routine.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested at (or too close to) a pole.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A table or cache does not cover the range a computation needs.
struct CoverageError : std::runtime_error {
    explicit CoverageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested size exceeds the configured memory ceiling.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Zero-scan completeness certification failed after all retries.
struct CompletenessError : std::runtime_error {
    explicit CompletenessError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal contradiction: something the theory guarantees failed numerically.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace znt
