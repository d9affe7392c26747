#include "sinecone/errors.hpp"

namespace sinecone {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::MixedField: return "MixedField";
    case ErrorKind::NotInField: return "NotInField";
    case ErrorKind::BelowHardyBound: return "BelowHardyBound";
    case ErrorKind::UnboundedBelow: return "UnboundedBelow";
    case ErrorKind::InsufficientBaseCutoff: return "InsufficientBaseCutoff";
    case ErrorKind::InsufficientCutoff: return "InsufficientCutoff";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::MissingData: return "MissingData";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::OutsideHypotheses: return "OutsideHypotheses";
    case ErrorKind::IllPosed: return "IllPosed";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::SolverDisagreement: return "SolverDisagreement";
  }
  return "Error";
}

}  // namespace sinecone
