#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ztau {

// Input violates a mathematical precondition (zero divisor, zero component,
// non-Pythagorean triple, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed element text. position() is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured resource cap (patch iterations, search bound) was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Should be unreachable; raised when an internal consistency check fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ztau
