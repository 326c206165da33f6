#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goursat {

enum class ErrorCode {
  EmptyWord,
  BadSymbol,
  LeadingCritical,
  OrphanT,
  NotGoursat,
  TooShort,
  Unsupported,
  InvalidInput,
  NonMonotone,
  InvalidPC,
  NotRealizable,
  MissingM0,
  RouteMismatch,
  IndexRange,
  VariableMismatch,
  NonExactDivision,
  StepBudgetExceeded,
  TruncationTooSmall,
  OrderMismatch,
  ResourceBudget,
};

const char* to_string(ErrorCode code);

// Every failure in the library is reported through this type. `position` is
// the 1-based offending symbol for word-grammar errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t position = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace goursat
