#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gnio {

enum class ErrorCode {
  EmptyInstance,
  NonPositiveWeight,
  LengthMismatch,
  NegativePenalty,
  BracketFailure,
  DegeneratePiece,
  UnboundedBelow,
  GridTooLarge,
  InfeasiblePoint,
  IoFailure,
};

const char* error_name(ErrorCode code);

// All library failures throw this; the CLI maps error_name() onto stderr
// and the code class onto an exit status.
class GnioError : public std::runtime_error {
 public:
  GnioError(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  explicit GnioError(ErrorCode code) : GnioError(code, "") {}

  GnioError(ErrorCode code, std::size_t index)
      : GnioError(code, "index " + std::to_string(index)) {
    index_ = static_cast<std::ptrdiff_t>(index);
  }

  ErrorCode code() const noexcept { return code_; }
  // -1 when the error has no associated coordinate.
  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::ptrdiff_t index_ = -1;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativePenalty: return "NegativePenalty";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::DegeneratePiece: return "DegeneratePiece";
    case ErrorCode::UnboundedBelow: return "UnboundedBelow";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace gnio
