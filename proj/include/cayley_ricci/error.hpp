#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ricci {

enum class ErrorCode {
  InvalidGroup,
  NotCanonical,
  ParseError,
  DivisionByZero,
  NonSymmetricSet,
  ContainsIdentity,
  NotGenerating,
  NotAnEdge,
  AlphaOutOfRange,
  InvalidMeasure,
  UnbalancedMeasures,
  SearchSpaceTooLarge,
  MarginalMismatch,
  NotLipschitz,
  UndefinedPotential,
  SameVertex,
  StabilizationFailure,
  NotInTable,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this exception; callers branch on
// code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ricci
