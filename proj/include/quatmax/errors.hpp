#pragma once

#include <stdexcept>
#include <string>

namespace quatmax {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a point a field declares singular.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be nonzero (φ, ε, μ, a divisor) vanished.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A complex square root would have to cross the principal branch cut.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation's precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Bad grid, profile, suite or CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace quatmax
