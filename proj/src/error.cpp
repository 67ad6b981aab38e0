#include "gbcode/error.hpp"

namespace gbcode {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInversionOfZero: return "InversionOfZero";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kExponentOverflow: return "ExponentOverflow";
    case ErrorCode::kFieldEquationsMissing: return "FieldEquationsMissing";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kParameterTooLarge: return "ParameterTooLarge";
    case ErrorCode::kNotSystematic: return "NotSystematic";
    case ErrorCode::kOddDifference: return "OddDifference";
    case ErrorCode::kLengthTooSmall: return "LengthTooSmall";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kTimeout: return "Timeout";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gbcode
