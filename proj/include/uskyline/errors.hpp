#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uskyline {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (wrong arity, non-numeric field, self-loop, ...).
// Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed input carrying out-of-range values (weight <= 0, prob outside (0,1]).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Missing or inconsistent configuration (absent defaults, invalid ranges, bad plan keys).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Vertex id not present in the graph.
class LookupError : public Error {
public:
    using Error::Error;
};

// Invalid argument combination (mask length mismatch, u == v, overlapping sets, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Operation refused because an input exceeds a hard size limit (2^m blowup guards).
class LimitError : public Error {
public:
    using Error::Error;
};

// Query-selection strategy cannot run (empty seed pool under the configured threshold).
class StrategyError : public Error {
public:
    using Error::Error;
};

// Query selection gave up after the bounded retry budget.
class SelectionInfeasibleError : public StrategyError {
public:
    using StrategyError::StrategyError;
};

}  // namespace uskyline
