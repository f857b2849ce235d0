#pragma once

#include <stdexcept>
#include <string>

namespace uavdss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (e.g. a zero divisor).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input: bad ids, missing criteria, broken invariants.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::string pointer = {})
      : Error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}

  /// JSON pointer to the offending field, empty when not applicable.
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// An iterative procedure failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A referenced entity (mission, profile, method) does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace uavdss
