// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gale {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid or inconsistent configuration (bad parameters, unknown keys, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File or stream level failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solve failed to converge; carries the iterate history.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> iterates)
        : std::runtime_error(what), iterates_(std::move(iterates)) {}

    const std::vector<double>& iterates() const { return iterates_; }

private:
    std::vector<double> iterates_;
};

} // namespace gale
