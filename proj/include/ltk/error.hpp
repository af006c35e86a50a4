#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltk {

enum class ErrorCode {
  DimensionMismatch,
  NotContained,
  NotCommuting,
  NotDiagonalizable,
  NotLeibniz,
  SingularMatrix,
  IdentityFailure,
  NotSplit,
  NotARoot,
  Lambda0NotSymmetric,
  LambdaNotSymmetric,
  NotRootSubsystem,
  UnknownName,
  BadParam,
  Parse,
};

inline std::string_view error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotContained: return "NOT_CONTAINED";
    case ErrorCode::NotCommuting: return "NOT_COMMUTING";
    case ErrorCode::NotDiagonalizable: return "NOT_DIAGONALIZABLE";
    case ErrorCode::NotLeibniz: return "NOT_LEIBNIZ";
    case ErrorCode::SingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::IdentityFailure: return "IDENTITY_FAILURE";
    case ErrorCode::NotSplit: return "NOT_SPLIT";
    case ErrorCode::NotARoot: return "NOT_A_ROOT";
    case ErrorCode::Lambda0NotSymmetric: return "LAMBDA0_NOT_SYMMETRIC";
    case ErrorCode::LambdaNotSymmetric: return "LAMBDA_NOT_SYMMETRIC";
    case ErrorCode::NotRootSubsystem: return "NOT_ROOT_SUBSYSTEM";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::BadParam: return "BAD_PARAM";
    case ErrorCode::Parse: return "PARSE_ERROR";
  }
  return "UNKNOWN_ERROR";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long index = -1)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), index_(index), message_(what) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  /// Offending operator / basis index where one applies, else -1.
  [[nodiscard]] long index() const noexcept { return index_; }
  /// what() without the code prefix.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  long index_;
  std::string message_;
};

}  // namespace ltk
