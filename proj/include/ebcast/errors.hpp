// errors.hpp - exception types shared by every ebcast module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ebcast {

/// A parameter is outside the domain an operation accepts (sizes, k, ids).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An input value has the wrong shape for the graph it is paired with.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation that needs finite distances sees a disconnected graph.
class ConnectivityError : public std::runtime_error {
public:
    ConnectivityError(std::string message, int from, int to)
        : std::runtime_error(std::move(message)), from_(from), to_(to) {}

    int from() const noexcept { return from_; }
    int to() const noexcept { return to_; }

private:
    int from_;
    int to_;
};

/// Text input could not be parsed. `kind()` names the failure class,
/// `line()` is 1-based (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
public:
    enum class Kind {
        malformed,
        self_loop,
        duplicate_edge,
        out_of_range,
        edge_count,
        disconnected,
        too_small,
        clause_width,
        repeated_variable,
        tautology,
    };

    ParseError(Kind kind, std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message
                                       : "line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ebcast
