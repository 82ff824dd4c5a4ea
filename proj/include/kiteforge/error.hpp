#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kiteforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (spec strings, files, arguments).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error at a byte offset of the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Internal invariant broken; indicates a bug rather than bad input.
class LogicError : public Error {
 public:
  using Error::Error;
};

}  // namespace kiteforge
