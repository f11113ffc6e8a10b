#pragma once

#include <stdexcept>
#include <string>

namespace mutflow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Argument outside the function's real domain (e.g. li2(x) with x > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSkewSymmetrizable : public Error {
 public:
  using Error::Error;
};

// A c-vector with mixed signs or all zeros; falsifies sign-coherence and
// always indicates a bug upstream, never a recoverable condition.
class SignCoherenceViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Exponent guard tripped before exp(), or integer arithmetic out of range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class NotOnM0 : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A theorem-backed internal consistency check failed (e.g. the four
// periodicity criteria disagree).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mutflow
