#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stratalab {

enum class ErrorCode {
  EmptyPotList,
  NonPositive,
  Indivisible,
  CapacityMismatch,
  BadCommitCount,
  BudgetExceeded,
  BadLabel,
  BadTrials,
};

/// Stable wire name, e.g. "INDIVISIBLE".
std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as an Error. The
/// detail map carries machine-readable context (the offending modulus, the
/// outcome count that exceeded a budget, ...), values rendered as strings.
class Error : public std::runtime_error {
 public:
  using Detail = std::map<std::string, std::string>;

  Error(ErrorCode code, const std::string& message, Detail detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const Detail& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  Detail detail_;
};

}  // namespace stratalab
