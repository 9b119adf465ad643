#include "hibi/error.hpp"

namespace hibi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::NotHyperPlanar: return "NotHyperPlanar";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotStrictlyOrderReversing: return "NotStrictlyOrderReversing";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace hibi
