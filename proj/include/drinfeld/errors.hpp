#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drinfeld {

// Malformed text input. `position` is a 0-based offset into the source.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Input is well-formed but violates a mathematical precondition of the
// operation (non-conforming u-series support, undecided parity, ...).
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A truncated Laurent series ran out of retained terms.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search or linear-algebra step would exceed its configured work bound.
class WorkBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drinfeld
