#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cadorder {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by an algebraic operation (zero operand, degree too low, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem text. Line and column are 1-based and point at the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Inconsistent or incomplete benchmark data (cell tables, dangling picks).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Request outside configured limits (e.g. too many variables to enumerate).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace cadorder
