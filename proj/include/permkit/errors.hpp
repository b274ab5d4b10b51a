#ifndef PERMKIT_ERRORS_HPP
#define PERMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad permutation text, size mismatch, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for otherwise well-formed input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a configured size or memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace permkit

#endif  // PERMKIT_ERRORS_HPP
