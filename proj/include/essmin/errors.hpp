#pragma once

#include <stdexcept>
#include <string>

namespace essmin {

/// Bad input value: zero where nonzero is required, malformed literal, non-prime modulus.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (e.g. b/a outside (0,4)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A named hypothesis of a closed-form result does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Should be unreachable on a valid domain; indicates a numerical or logic failure.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace essmin
