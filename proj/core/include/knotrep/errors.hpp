#pragma once

#include <stdexcept>
#include <string>

namespace knotrep {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported user input. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  using InputError::InputError;
};

/// The diagram closes up to a link with more than one component.
class NotAKnot : public InputError {
 public:
  using InputError::InputError;
};

class InconsistentDiagram : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. These never fire on valid input;
/// the CLI maps them to exit code 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ZeroDeterminant : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class DivisibilityViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class RelationFailure : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class ToleranceExceeded : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

/// A character handed to a representation constructor does not have the
/// order the constructor needs.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A counting formula needs finite first homology of every divisor cover.
class InfiniteHomology : public Error {
 public:
  using Error::Error;
};

}  // namespace knotrep
