#pragma once

#include <stdexcept>
#include <string>

namespace cw {

// Exception hierarchy. The CLI maps each type onto a fixed exit code.

/// Rejected parameters: non-prime p, reducible modulus, m <= k, malformed flags.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured work bound.
class WorkLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed form was requested for a parameter range it does not cover
/// (C1 with odd s).
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent derivations of the same quantity disagreed, or an exact
/// divisibility that must hold did not. Always signals an arithmetic bug.
class ConsistencyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The floating-point transform path could not round to integers within the
/// residual bound. Callers should fall back to direct enumeration.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cw
