#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyexp {

// Bad user input: malformed text, violated preconditions, unsupported sizes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Desk-scale limit hit; not a mathematical failure.
class DegreeCapError : public InputError {
 public:
  using InputError::InputError;
};

// A post-check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polyexp
