#pragma once

#include <stdexcept>
#include <string>

namespace quatbound {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Inversion of a zero quaternion.
class ZeroDivisionError : public Error {
  public:
    using Error::Error;
};

/// Matrix shapes incompatible with the requested operation.
class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

/// An iterative spectral solver did not reach its tolerance within budget.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// A documented operation precondition was violated by the caller.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// The zero polynomial was passed where a nonzero one is required.
class ZeroPolynomialError : public Error {
  public:
    using Error::Error;
};

/// Monic normalization of a polynomial whose leading coefficient vanishes.
class ZeroLeadingError : public Error {
  public:
    using Error::Error;
};

/// A coefficient expected to be real carried a non-negligible imaginary part.
class NonRealCoefficientError : public Error {
  public:
    using Error::Error;
};

/// Filesystem-level failure (missing or unreadable file).
class IoError : public Error {
  public:
    using Error::Error;
};

/// Structurally invalid input data; the message names the offending field.
class SchemaError : public Error {
  public:
    using Error::Error;
};

}  // namespace quatbound
