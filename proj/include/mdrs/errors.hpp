#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdrs {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
public:
  using Error::Error;
};

class FieldTooLarge : public Error {
public:
  using Error::Error;
};

// An element code is not representable in the field it was used with.
class FieldMismatch : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

// d < 1 or d > q^n: the degree region admits no coefficients.
class EmptyRegion : public Error {
public:
  using Error::Error;
};

// q^n exceeds the block-length limit for materialized codes.
class CodeTooLarge : public Error {
public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
public:
  using Error::Error;
};

class LengthMismatch : public Error {
public:
  using Error::Error;
};

class ArityMismatch : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// Erasure solve has more than one solution.
class RankDeficient : public Error {
public:
  using Error::Error;
};

// Erasure solve has no solution; the unerased symbols are not a codeword
// restriction.
class Inconsistent : public Error {
public:
  using Error::Error;
};

class InvalidComponent : public Error {
public:
  using Error::Error;
};

class InvalidShortening : public Error {
public:
  using Error::Error;
};

// Malformed symbol file; carries the 1-based position of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mdrs
