#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccenum {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Raised by the text loaders. `line()` is 1-based; 0 when the error is not
/// tied to a particular line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SelfLoopRejected : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class NotInduced : public Error {
 public:
  using Error::Error;
};

class InputTooLarge : public Error {
 public:
  using Error::Error;
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ccenum
