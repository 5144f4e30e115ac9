// Error types shared across the toolkit. The CLI maps these onto its
// exit-code contract (2 parse, 3 semantic, 4 resource, 1 internal).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radokit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text does not match the grammar. Column is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t column)
        : Error(msg + " (column " + std::to_string(column) + ")"), column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Well-formed input that violates a semantic rule.
class SemanticError : public Error {
public:
    using Error::Error;
};

// Equation unusable for the requested operation (zero coefficient,
// nonzero coefficient sum where zero is required, too few variables).
class InvalidEquation : public SemanticError {
public:
    using SemanticError::SemanticError;
};

// Vector lengths disagree with the equation's variable count.
class DimensionMismatch : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class InvalidInput : public SemanticError {
public:
    using SemanticError::SemanticError;
};

// A value fell outside the domain it is checked against.
class RangeError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

// A configured budget was exhausted before the computation finished.
// Distinct from a definitive negative answer.
class ResourceExceeded : public Error {
public:
    explicit ResourceExceeded(const std::string& msg, std::uint64_t work = 0,
                              int depth_reached = -1)
        : Error(msg), work_(work), depth_reached_(depth_reached) {}

    // Units depend on the throwing operation (search nodes, oracle states,
    // block tuples).
    std::uint64_t work() const { return work_; }

    // For the coloring search: deepest initial segment that still admitted
    // a good coloring when the budget ran out. -1 when not applicable.
    int depth_reached() const { return depth_reached_; }

private:
    std::uint64_t work_;
    int depth_reached_;
};

} // namespace radokit
