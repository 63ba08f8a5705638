#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Invalid or unsupported parameters (CLI exit code 3).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap was hit before the answer was known (CLI exit code 2).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A search that is guaranteed to succeed under its preconditions came up empty.
// Surfacing this means the caller's hypothesis was violated (CLI exit code 1).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kneser
