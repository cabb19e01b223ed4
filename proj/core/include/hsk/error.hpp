#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsk {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A substitution would bind a variable under a quantifier.
class CaptureError : public Error {
 public:
  using Error::Error;
};

/// A term was used outside the universe it was supposed to belong to.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsk
