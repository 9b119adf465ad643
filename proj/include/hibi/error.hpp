#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hibi {

enum class ErrorKind {
  CycleDetected,
  DuplicateLabel,
  UnknownLabel,
  EmptyPoset,
  UnknownElement,
  DecompositionMismatch,
  NotHyperPlanar,
  NotPlanar,
  ParameterOutOfRange,
  TooLarge,
  NotStrictlyOrderReversing,
  BudgetExceeded,
  ConsistencyFailure,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hibi
