#include "pentagram/error.hpp"

namespace pentagram {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateSpan: return "DegenerateSpan";
    case ErrorCode::kDegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kGenericityFailure: return "GenericityFailure";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kExhaustedRetries: return "ExhaustedRetries";
    case ErrorCode::kNotCorrugated: return "NotCorrugated";
    case ErrorCode::kNotPartiallyCorrugated: return "NotPartiallyCorrugated";
    case ErrorCode::kNormalizationFailure: return "NormalizationFailure";
    case ErrorCode::kVariantMismatch: return "VariantMismatch";
    case ErrorCode::kStructureMismatch: return "StructureMismatch";
    case ErrorCode::kZeroDiscriminant: return "ZeroDiscriminant";
    case ErrorCode::kNonSimpleBranching: return "NonSimpleBranching";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<long> index) {
  std::string out(to_string(code));
  out += ": ";
  out += message;
  if (index) out += " (index " + std::to_string(*index) + ")";
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<long> index)
    : std::runtime_error(decorate(code, message, index)),
      code_(code),
      index_(index) {}

}  // namespace pentagram
