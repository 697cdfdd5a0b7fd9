#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace implicit {

/// Caller supplied something outside an operation's domain (zero polynomial,
/// non-square matrix, mismatched lengths, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two interpolation nodes of a Vandermonde system coincide.
class DuplicateNode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The parametrization cannot be implicitized by the selected method
/// (constant coordinate, nullity never drops to one, ...).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A postcondition that holds for every valid input was violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace implicit
