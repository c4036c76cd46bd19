#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace iwb {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument's value was violated (e.g. x = 0 where x >= 1 is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (count-table memory, table cells, ...) would be exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Position of the first offending character plus what would have been accepted there.
struct ParseError {
  std::size_t position = 0;
  std::vector<std::string> expected;
  std::string message;

  std::string describe() const;
};

template <class T>
using ParseResult = std::variant<T, ParseError>;

/// Thrown by the convenience `*_or_throw` parsers.
class ParseFailure : public Error {
 public:
  explicit ParseFailure(ParseError error)
      : Error(error.describe()), error_(std::move(error)) {}

  const ParseError& error() const noexcept { return error_; }

 private:
  ParseError error_;
};

template <class T>
T value_or_throw(ParseResult<T> result) {
  if (auto* error = std::get_if<ParseError>(&result)) {
    throw ParseFailure(std::move(*error));
  }
  return std::move(std::get<T>(result));
}

}  // namespace iwb
