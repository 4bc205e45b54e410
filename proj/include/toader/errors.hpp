#pragma once

#include <stdexcept>
#include <string>

namespace toader {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested integral diverges (K at r = 1).
class DivergentIntegral : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The input sits on the diagonal a = b where the operation is undefined.
class DegenerateInput : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invalid harness configuration: bad grid, unknown suite or target.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace toader
