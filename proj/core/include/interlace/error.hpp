#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace interlace {

/// Domain error codes surfaced by library operations. The CLI maps every
/// code to exit status 1; usage problems are handled separately.
enum class ErrorCode {
  kAsymmetric,
  kNonzeroDiagonal,
  kNonpositiveDistance,
  kTriangleViolation,
  kShapeMismatch,
  kSingletonSpace,
  kCardinalityMismatch,
  kMTooSmall,
  kEpsilonOutOfRange,
  kNotQIntegral,
  kOddDistance,
  kMissingLabel,
  kCardinalityNonuniform,
  kParseError,
  kNotLimit,
  kBudgetExceeded,
  kSearchExhausted,
  kPrecondition,
  kMissingDistance,
  kNotAVine,
  kRhoBounded,
  kLadderTooShort,
  kNotInClass,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace interlace
