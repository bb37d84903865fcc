#pragma once

#include <stdexcept>
#include <string>

namespace amgm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain object was built from data that violates one of its invariants.
/// The message names the violated invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument (exponent, tolerance, search setting) is out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The inputs are valid but the requested quantity is undefined for them.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Discretized functions do not share the same quadrature grid.
class GridError : public Error {
 public:
  using Error::Error;
};

}  // namespace amgm
