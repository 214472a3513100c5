#pragma once

#include <stdexcept>
#include <string>

namespace sbpbox {

/// Thrown when a caller violates a documented precondition.
class ContractViolation : public std::invalid_argument {
public:
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an iterative method exhausts its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sbpbox
