#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittartin {

enum class ErrorCode {
  NotContained,
  NotPositiveDefinite,
  AmbientMismatch,
  DimensionMismatch,
  Singular,
  InvalidAlgebra,
  NotSubalgebra,
  ValidationFailed,
  ChainInconsistent,
  DegenerateModel,
  NotInN0,
  OffSlice,
  SeriesNotConverged,
  Parse,
  UnknownExample,
};

std::string_view name(ErrorCode code);

/// Library-wide exception. `code()` identifies the failure class; `what()`
/// carries the human-readable diagnostic (witness, field path, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NotSubalgebra: return "NotSubalgebra";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::ChainInconsistent: return "ChainInconsistent";
    case ErrorCode::DegenerateModel: return "DegenerateModel";
    case ErrorCode::NotInN0: return "NotInN0";
    case ErrorCode::OffSlice: return "OffSlice";
    case ErrorCode::SeriesNotConverged: return "SeriesNotConverged";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

}  // namespace wittartin
