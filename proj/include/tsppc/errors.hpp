#pragma once

#include <stdexcept>
#include <string>

namespace tsppc {

// Malformed input text (TSPLIB, .tsppc, .tour). line is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Structurally valid input that violates a model invariant (bad tour,
// inconsistent payload data, out-of-range node reference).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation preconditions (invalid node id, degenerate geometry input).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Instance exceeds a hard size cap (exact oracle, DFJ enumeration).
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tsppc
