#pragma once

#include <stdexcept>
#include <string>

namespace isopair {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Raised by exact inversion/solves; carries the column whose pivot vanished.
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(std::size_t pivot)
      : Error("singular matrix: zero pivot in column " + std::to_string(pivot)), pivot_(pivot) {}
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a convention bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace isopair
