#pragma once

#include <stdexcept>
#include <string>

namespace landen {

/// Argument outside the domain of an operation (m outside [0,1], K(1), non-finite x, bad p).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A coefficient is undefined because a cancelling sum has collapsed into rounding noise.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency identity failed to hold at its stated tolerance.
class IdentityViolation : public std::runtime_error {
 public:
  explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace landen
