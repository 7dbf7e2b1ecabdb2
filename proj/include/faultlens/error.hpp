#pragma once

/// @file error.hpp
/// @brief Exception hierarchy shared by every faultlens module.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace faultlens {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// A circuit failed validation and cannot be used for simulation or strategy queries.
class InvalidCircuitError : public Error {
  public:
    using Error::Error;
};

/// A named entity (gate, test point, sink, template, session...) does not exist.
class NotFoundError : public Error {
  public:
    using Error::Error;
};

/// An argument violates an operation's precondition.
class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

/// Observations rule out every remaining hypothesis.
class ContradictoryEvidenceError : public Error {
  public:
    using Error::Error;
};

/// No available test separates the remaining hypotheses.
class IndistinguishableError : public Error {
  public:
    using Error::Error;
};

/// The request is well-formed but not allowed in the current state, e.g. a
/// response for a study phase that is not the current one.
class ConflictError : public Error {
  public:
    using Error::Error;
};

/// A model client could not deliver a response.
class TransportError : public Error {
  public:
    using Error::Error;
};

}  // namespace faultlens
