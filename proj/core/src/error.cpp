#include "bayesreg/error.hpp"

#include <sstream>

namespace bayesreg {

namespace {

template <typename... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

ConstantColumn::ConstantColumn(std::size_t column)
    : ValidationError(concat("column ", column, " is constant (zero standard deviation)")),
      column_(column) {}

NegativePenalty::NegativePenalty(double lambda)
    : ValidationError(concat("penalty weight must be non-negative, got ", lambda)) {}

DimensionTooSmall::DimensionTooSmall(std::size_t p, std::size_t minimum)
    : ValidationError(concat("dimension p = ", p, " is too small; need p >= ", minimum)) {}

InsufficientSamples::InsufficientSamples(std::size_t have, std::size_t need)
    : ValidationError(concat("need at least ", need, " retained draws, have ", have)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& detail)
    : ValidationError(concat("parse error at line ", line, ", column ", column, ": ", detail)),
      line_(line),
      column_(column) {}

RaggedRows::RaggedRows(std::size_t line, std::size_t expected, std::size_t got)
    : ValidationError(concat("ragged row at line ", line, ": expected ", expected, " cells, got ", got)),
      line_(line) {}

NonNumericCell::NonNumericCell(std::size_t line, std::size_t column, const std::string& cell)
    : ParseError(line, column, concat("non-numeric cell '", cell, "'")) {}

SingularDesign::SingularDesign(double ratio)
    : NumericalError(concat("X^T X is numerically singular (lambda_min/lambda_max = ", ratio, ")")) {}

QuadratureFailure::QuadratureFailure(double estimate, double error, double target)
    : NumericalError(concat("quadrature did not converge: estimate ", estimate, ", error ", error,
                            ", target ", target)) {}

}  // namespace bayesreg
