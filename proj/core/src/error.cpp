#include "pcross/error.hpp"

namespace pcross {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::InvalidField: return "invalid-field";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::ShapeError: return "shape-error";
    case ErrorCode::MissingObject: return "missing-object";
    case ErrorCode::UnknownCommand: return "unknown-command";
    case ErrorCode::PreconditionFailed: return "precondition-failed";
    case ErrorCode::NotCentral: return "not-central";
    case ErrorCode::NotIdempotent: return "not-idempotent";
    case ErrorCode::NonGroup: return "non-group";
    case ErrorCode::ClosureViolation: return "closure-violation";
    case ErrorCode::CoinvariantsMismatch: return "coinvariants-mismatch";
    case ErrorCode::NonCocommutative: return "non-cocommutative";
    case ErrorCode::NotInCentralizer: return "c-not-in-centralizer";
    case ErrorCode::NotIntegral: return "t-not-integral";
    case ErrorCode::NormalizationFailed: return "normalization-failed";
    case ErrorCode::CompositeNotGauge: return "composite-not-gauge";
  }
  return "unknown-error";
}

}  // namespace pcross
