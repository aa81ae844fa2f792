#pragma once

#include <stdexcept>
#include <string>

namespace eulerhall {

/// Malformed or out-of-contract input supplied by a caller.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds the size bound of an exponential-time routine.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An atom id would exceed the configured cap.
class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// One of the verified theorems failed on a concrete input. Never expected;
/// reported with exit code 2 by the CLI.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eulerhall
