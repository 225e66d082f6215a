#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expmap {

enum class ErrorKind {
  MixedFields,
  DivisionByZero,
  NotPrime,
  RingMismatch,
  ReservedVariable,
  ExponentOverflow,
  DivisionByZeroPoly,
  SyntaxError,
  UnknownVariable,
  ZeroElement,
  InvariantElement,
  BadArgument,
  NotASlice,
  DegreeNotDivisible,
  NoNonInvariantInWindow,
  NotInvariant,
  HypothesisViolation,
  FactorizationMismatch,
  NotInvariantFactor,
  ZeroLeadingCoefficient,
  InvariantViolation,
  InstanceFormat,
};

const char* to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type; `kind()` tells callers
// (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry the zero-based byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised by reduce_denominator. `coefficient` is the index i0 of a coefficient
// not divisible by factor number `factor` (1-based, as p_1 ... p_l).
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::size_t coefficient, std::size_t factor)
      : Error(ErrorKind::HypothesisViolation,
              "coefficient " + std::to_string(coefficient) +
                  " is not divisible by factor " + std::to_string(factor)),
        coefficient_(coefficient),
        factor_(factor) {}

  std::size_t coefficient() const noexcept { return coefficient_; }
  std::size_t factor() const noexcept { return factor_; }

 private:
  std::size_t coefficient_;
  std::size_t factor_;
};

}  // namespace expmap
