#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polya {

enum class ErrorCode {
  DegenerateTriangle,
  UnknownRegion,
  UnknownConstant,
  DivisionByIntervalContainingZero,
  AngleOutOfRange,
  ConvergenceFailure,
  DomainError,
  ValidityViolation,
  ZeroWidthInterval,
  UnknownName,
  DegenerateShape,
  LevelTooHigh,
  SolverDivergence,
  NonContracting,
  OutOfRegion,
  UnknownCase,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::UnknownRegion: return "UnknownRegion";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::DivisionByIntervalContainingZero: return "DivisionByIntervalContainingZero";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ValidityViolation: return "ValidityViolation";
    case ErrorCode::ZeroWidthInterval: return "ZeroWidthInterval";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::LevelTooHigh: return "LevelTooHigh";
    case ErrorCode::SolverDivergence: return "SolverDivergence";
    case ErrorCode::NonContracting: return "NonContracting";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace polya
