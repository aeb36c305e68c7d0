#pragma once

#include <stdexcept>
#include <string>

namespace fiberosc {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the operation's domain (bad interval, point/space mismatch, p == q, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A set handed to a topology-sensitive operation is not open in the model.
struct TopologyError : Error {
    explicit TopologyError(const std::string& what) : Error(what) {}
};

// Oscillation support escapes the keep set (h not a member of Z_A).
struct MembershipError : Error {
    explicit MembershipError(const std::string& what) : Error(what) {}
};

// Numeric parameter out of range (c <= 1, epsilon <= 0, ...).
struct ParameterError : Error {
    explicit ParameterError(const std::string& what) : Error(what) {}
};

// Operation not defined for the model's topology mode.
struct UnsupportedTopology : Error {
    explicit UnsupportedTopology(const std::string& what) : Error(what) {}
};

// Malformed input text/JSON.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace fiberosc
