#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epflow {

// Base class for everything the engine throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Source text could not be read as an expression, program, or registry.
// what() is of the form "line:col: message"; the raw parts are kept so a
// caller can prepend a file name.
class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(std::move(message)),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A well-formed value was used outside an operation's domain (hat of a
// failure, colift of a non-encoding, a program whose walk falls off the
// bottom, ...).
struct EvalError : Error {
  using Error::Error;
};

// A configured cap was exceeded: inspection recursion depth, expression
// nesting, or the magnitude cap on unary encodings.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace epflow
