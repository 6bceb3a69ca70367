#pragma once

#include <stdexcept>
#include <string>

namespace cspin {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (scenario files, overrides).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain of an operation, including dimension
/// mismatches and size limits.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical check failed: an invariant was violated beyond its tolerance.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cspin
