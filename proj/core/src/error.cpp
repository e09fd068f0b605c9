#include "isocrystal/error.hpp"

namespace isocrystal {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kDivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::kNonIntegerEntry: return "NonIntegerEntry";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidSlopeDatum: return "InvalidSlopeDatum";
    case ErrorCode::kNotDominant: return "NotDominant";
    case ErrorCode::kInvalidDatum: return "InvalidDatum";
    case ErrorCode::kInvalidMu: return "InvalidMu";
    case ErrorCode::kNotUnique: return "NotUnique";
    case ErrorCode::kSingularV: return "SingularV";
    case ErrorCode::kReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::kSingularForm: return "SingularForm";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNonIntegralStep: return "NonIntegralStep";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kBadLeadingCoefficient: return "BadLeadingCoefficient";
    case ErrorCode::kNotIrreducibleModP: return "NotIrreducibleModP";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace isocrystal
