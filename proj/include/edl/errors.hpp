#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace edl {

/// Invalid experiment or domain configuration. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degenerate metric or coefficient found while building the discrete operator.
class AssemblyError : public std::runtime_error {
public:
    AssemblyError(const std::string& what, std::size_t cell)
        : std::runtime_error(what + " (cell " + std::to_string(cell) + ")"), cell_(cell) {}
    std::size_t cell() const noexcept { return cell_; }

private:
    std::size_t cell_;
};

/// Krylov solve failed to reach the requested tolerance. Maps to exit code 3.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, std::vector<double> history)
        : std::runtime_error(what), history_(std::move(history)) {}
    const std::vector<double>& residual_history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

/// Non-finite sample, non-positive field where positivity is required, and similar.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A geometric precondition failed (level curve missing, nesting violated, broken chain).
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace edl
