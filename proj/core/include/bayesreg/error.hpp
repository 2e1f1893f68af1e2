#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bayesreg {

/// Coarse error category. The command-line tool maps these onto exit codes.
enum class ErrorKind { Validation, Io, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

// Validation failures.

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConstantColumn : public ValidationError {
 public:
  explicit ConstantColumn(std::size_t column);
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class NegativePenalty : public ValidationError {
 public:
  explicit NegativePenalty(double lambda);
};

class ZeroGradient : public ValidationError {
 public:
  ZeroGradient() : ValidationError("X^T y is zero; relative sensitivity is undefined") {}
};

class UndefinedAtZero : public ValidationError {
 public:
  UndefinedAtZero() : ValidationError("horseshoe penalty bound is undefined at beta = 0") {}
};

class DimensionTooSmall : public ValidationError {
 public:
  DimensionTooSmall(std::size_t p, std::size_t minimum);
};

class ZeroVector : public ValidationError {
 public:
  ZeroVector() : ValidationError("James-Stein shrinkage is undefined for a zero observation vector") {}
};

class InsufficientSamples : public ValidationError {
 public:
  InsufficientSamples(std::size_t have, std::size_t need);
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class RaggedRows : public ValidationError {
 public:
  RaggedRows(std::size_t line, std::size_t expected, std::size_t got);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NonNumericCell : public ParseError {
 public:
  NonNumericCell(std::size_t line, std::size_t column, const std::string& cell);
};

// Numerical failures.

class SingularDesign : public NumericalError {
 public:
  explicit SingularDesign(double ratio);
};

class QuadratureFailure : public NumericalError {
 public:
  QuadratureFailure(double estimate, double error, double target);
};

class NumericalBreakdown : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace bayesreg
