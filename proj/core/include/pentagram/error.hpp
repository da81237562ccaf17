#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pentagram {

enum class ErrorCode {
  kDegenerateSpan,
  kDegenerateIntersection,
  kDegenerateInput,
  kGenericityFailure,
  kDivisionByZero,
  kExhaustedRetries,
  kNotCorrugated,
  kNotPartiallyCorrugated,
  kNormalizationFailure,
  kVariantMismatch,
  kStructureMismatch,
  kZeroDiscriminant,
  kNonSimpleBranching,
  kInvalidArgument,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `index` names the offending vertex,
// row, or step when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<long> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<long> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<long> index_;
};

}  // namespace pentagram
