#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gyro {

using Witness = std::vector<std::uint32_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the carrier's element domain (e.g. a ball vector
/// with norm too close to 1).
class InvalidElement : public Error {
 public:
  using Error::Error;
};

/// Floating point breakdown inside a ball formula (vanishing denominator,
/// result leaving the open ball).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A documented precondition does not hold. Carries the hypothesis that failed
/// and, where one exists, a witness tuple.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string hypothesis, const std::string& what, Witness witness = {})
      : Error(what), hypothesis_(std::move(hypothesis)), witness_(std::move(witness)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  std::string hypothesis_;
  Witness witness_;
};

/// The left-gyroaddition coset criterion does not hold for the requested
/// subgyrogroup.
class CriterionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Operands belong to different carriers.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// A postcondition that the theory guarantees was observed to fail. Reaching
/// this indicates a defect, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gyro
