#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbcode {

enum class ErrorCode {
  kInversionOfZero,
  kNotPrime,
  kRingMismatch,
  kInvalidInput,
  kParseError,
  kExponentOverflow,
  kFieldEquationsMissing,
  kDegreeOutOfRange,
  kParameterTooLarge,
  kNotSystematic,
  kOddDifference,
  kLengthTooSmall,
  kHypothesisViolated,
  kTimeout,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gbcode
