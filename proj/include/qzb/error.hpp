#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qzb {

enum class ErrorCode {
  ZeroDivision,
  DegenerateReal,
  HypothesisViolated,
  SideMismatch,
  SymmetrizationNotReal,
  NonPositiveScale,
  ZeroLeading,
  NonPositiveDiagonal,
  BadIndices,
  DegenerateAllZero,
  NoConvergence,
  OracleInconsistent,
  SpecInvalid,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure signalled by the library. The code identifies the signal,
/// the message carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qzb
