#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylbb {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values built over different variable tables were combined.
struct ArityMismatch : Error {
  using Error::Error;
};

// Exact polynomial division was requested but the divisor does not divide.
struct NotDivisible : Error {
  using Error::Error;
};

// A rational function was constructed with denominator zero.
struct ZeroDenominator : Error {
  using Error::Error;
};

// Division by the zero element of the coefficient field.
struct DivisionByZero : Error {
  using Error::Error;
};

// An operation that needs a nonzero operator received zero.
struct ZeroOperator : Error {
  using Error::Error;
};

// A set of monomials failed the downward-closure check.
struct NotOrderIdeal : Error {
  using Error::Error;
};

// Matrix inversion hit a column with no usable pivot.
struct SingularMatrix : Error {
  SingularMatrix(const std::string& msg, std::size_t col) : Error(msg), column(col) {}
  std::size_t column;
};

// A connection system failed (or has not passed) the integrability test.
struct NotIntegrable : Error {
  using Error::Error;
};

// A connection basis label is not a monomial order ideal where one is required.
struct BasisNotMonomial : Error {
  using Error::Error;
};

// Matrices that must commute pairwise do not.
struct NotCommuting : Error {
  using Error::Error;
};

// membership / normal_form called on a prebasis that was never verified.
struct PrebasisNotVerified : Error {
  using Error::Error;
};

// Border division exceeded its iteration cap; indicates an internal bug.
struct DivisionCapExceeded : Error {
  using Error::Error;
};

// Parse error with source position (1-based line and column).
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
        line(line_), col(col_) {}
  int line;
  int col;
};

// An identifier in an expression is not declared in the variable table.
struct UnknownIdentifier : SyntaxError {
  using SyntaxError::SyntaxError;
};

// Structural problem in a session file (bad statement, wrong matrix shape, ...).
struct SessionError : Error {
  using Error::Error;
};

}  // namespace weylbb
