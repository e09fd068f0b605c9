#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isocrystal {

enum class ErrorCode {
  kDivisionByZero,
  kSingularMatrix,
  kShapeMismatch,
  kDivisionByZeroPolynomial,
  kNonIntegerEntry,
  kLengthMismatch,
  kIndexOutOfRange,
  kInvalidSlopeDatum,
  kNotDominant,
  kInvalidDatum,
  kInvalidMu,
  kNotUnique,
  kSingularV,
  kReconstructionFailed,
  kSingularForm,
  kPreconditionViolated,
  kNonIntegralStep,
  kInvalidProfile,
  kBadLeadingCoefficient,
  kNotIrreducibleModP,
  kSearchExhausted,
  kParseError,
};

// Stable identifier used in JSON error objects, e.g. "InvalidMu".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isocrystal
