#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad dimensions, out-of-range indices, invalid parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a matrix that must be inverted is singular to working precision.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

}  // namespace rrge
