#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (bad parameters, malformed documents).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure exceeded its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A truncated power series did not carry enough terms to decide a valuation.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// An internal self-check failed. Always indicates a bug or a broken invariant.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// A bounded randomized search ran out of attempts.
class RetryExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace rlab
