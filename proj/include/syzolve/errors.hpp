#pragma once

#include <stdexcept>
#include <string>

namespace syzolve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file, literal, or schema.
struct ParseError : Error {
  using Error::Error;
};

/// Operand sizes do not agree (vector length, grid shape, ...).
struct DimensionError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

/// Leading (or constant-term) coefficient matrix of a divisor is not invertible.
struct LeadingCoefficientError : Error {
  using Error::Error;
};

/// Euclidean remainder sequence does not pass through the degrees the construction needs.
struct DegenerateSequenceError : Error {
  using Error::Error;
};

/// Float cancellation broke a degree invariant.
struct NumericalBreakdownError : Error {
  using Error::Error;
};

/// Operation needs something the coefficient field cannot provide (roots of unity, stability).
struct UnsupportedFieldError : Error {
  using Error::Error;
};

}  // namespace syzolve
