#pragma once

#include <stdexcept>
#include <string>

namespace pcross {

enum class ErrorCode {
  DimensionMismatch,
  FieldMismatch,
  DivisionByZero,
  InvalidField,
  ParseError,
  ShapeError,
  MissingObject,
  UnknownCommand,
  PreconditionFailed,
  NotCentral,
  NotIdempotent,
  NonGroup,
  ClosureViolation,
  CoinvariantsMismatch,
  NonCocommutative,
  NotInCentralizer,
  NotIntegral,
  NormalizationFailed,
  CompositeNotGauge,
};

const char* to_string(ErrorCode code);

// Every failure that is not a verification verdict surfaces as an Error.
// Verification failures are data (CheckReport), never exceptions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcross
