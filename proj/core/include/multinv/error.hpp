#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multinv {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  NotUnimodular,
  GroupTooLarge,
  NotContained,
  NotMultiple,
  NotReflectionGroup,
  AxiomFailure,
  GenerationFailure,
  SupportEscape,
  NotInvariant,
  TrivialGroup,
  NotSignGroup,
  HasReflections,
  AmbiguousFormula,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::NotUnimodular: return "NotUnimodular";
  case ErrorCode::GroupTooLarge: return "GroupTooLarge";
  case ErrorCode::NotContained: return "NotContained";
  case ErrorCode::NotMultiple: return "NotMultiple";
  case ErrorCode::NotReflectionGroup: return "NotReflectionGroup";
  case ErrorCode::AxiomFailure: return "AxiomFailure";
  case ErrorCode::GenerationFailure: return "GenerationFailure";
  case ErrorCode::SupportEscape: return "SupportEscape";
  case ErrorCode::NotInvariant: return "NotInvariant";
  case ErrorCode::TrivialGroup: return "TrivialGroup";
  case ErrorCode::NotSignGroup: return "NotSignGroup";
  case ErrorCode::HasReflections: return "HasReflections";
  case ErrorCode::AmbiguousFormula: return "AmbiguousFormula";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// AxiomFailure, GenerationFailure and SupportEscape signal internal bugs:
/// the mathematics guarantees those checks pass.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace multinv
