#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyban {

enum class ErrorCode {
  // Input that is malformed on its face. The CLI maps these to exit status 1.
  ParseError,
  IoError,
  SyntaxError,
  ScopeError,
  MalformedProgram,
  // Domain errors. The CLI maps these to exit status 2.
  EmptyInput,
  NotSymmetric,
  NotFullDimensional,
  DimensionMismatch,
  UnboundedPolytope,
  DegenerateSystem,
  DimensionCapExceeded,
  NotAnIsometry,
  NormTooLarge,
  NotEpsCommutative,
  StageOutOfRange,
  SquareNotCommuting,
  PreconditionViolated,
  AssignmentNotInSubspace,
  IsActuallyIdeal,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ScopeError: return "ScopeError";
    case ErrorCode::MalformedProgram: return "MalformedProgram";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::NotAnIsometry: return "NotAnIsometry";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::NotEpsCommutative: return "NotEpsCommutative";
    case ErrorCode::StageOutOfRange: return "StageOutOfRange";
    case ErrorCode::SquareNotCommuting: return "SquareNotCommuting";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::AssignmentNotInSubspace: return "AssignmentNotInSubspace";
    case ErrorCode::IsActuallyIdeal: return "IsActuallyIdeal";
  }
  return "UnknownError";
}

/// True for errors caused by unreadable or ill-formed input rather than by
/// a mathematical precondition.
constexpr bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::SyntaxError:
    case ErrorCode::ScopeError:
    case ErrorCode::MalformedProgram:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace polyban
