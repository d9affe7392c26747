#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sinecone {

enum class ErrorKind {
  NegativeRadicand,
  MixedField,
  NotInField,
  BelowHardyBound,
  UnboundedBelow,
  InsufficientBaseCutoff,
  InsufficientCutoff,
  CutoffTooSmall,
  MissingData,
  ParseError,
  InvariantViolation,
  OutsideHypotheses,
  IllPosed,
  ConvergenceFailure,
  VerificationFailed,
  IdentityFailed,
  DimensionMismatch,
  DecompositionFailed,
  SolverDisagreement,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sinecone
