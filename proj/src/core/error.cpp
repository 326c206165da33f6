#include "goursat/error.hpp"
#include "goursat/numeric.hpp"

namespace goursat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::LeadingCritical: return "LeadingCritical";
    case ErrorCode::OrphanT: return "OrphanT";
    case ErrorCode::NotGoursat: return "NotGoursat";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::InvalidPC: return "InvalidPC";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::MissingM0: return "MissingM0";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
    case ErrorCode::IndexRange: return "IndexRange";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ResourceBudget: return "ResourceBudget";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t position)
    : std::runtime_error(message), code_(code), position_(position) {}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const IntVec& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].get_str();
  }
  out += ')';
  return out;
}

}  // namespace goursat
