#pragma once

#include <stdexcept>
#include <string>

namespace srg {

// Caller broke a documented precondition (bad dimensions, bad arguments).
struct ContractError : std::invalid_argument {
    explicit ContractError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input object lacks the structure an operation requires (e.g. a graph that
// is not a lambda=1 strongly regular graph where one is expected).
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file; message carries the 1-based line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, long line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_no(line) {}
    long line_no;
};

// Parameter tuple failed the feasibility conditions.
struct FeasibilityError : std::runtime_error {
    explicit FeasibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Value requested outside its domain of definition.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two supposedly-equal internal computations disagreed; signals a formula
// transcription bug, not a property of the input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace srg
