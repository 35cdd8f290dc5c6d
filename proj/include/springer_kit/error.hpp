#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace springer_kit {

/// Exact integer type for ranks, parts and symbol entries.
using Integer = std::int64_t;

enum class ErrorCode {
  NotSorted,
  NonPositivePart,
  NotSymplectic,
  BoundExceeded,
  NegativeEntry,
  GapViolation,
  BottomEntryTooSmall,
  NegativeRank,
  NotReducible,
  ParameterMismatch,
  DefectMismatch,
  WrongParameters,
  NotInImage,
  RepeatedEntries,
  RankExceeded,
  Overflow,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. The code is stable and is
/// what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Checked arithmetic. All throw Error(Overflow) instead of wrapping.
Integer checked_add(Integer lhs, Integer rhs);
Integer checked_sub(Integer lhs, Integer rhs);
Integer checked_mul(Integer lhs, Integer rhs);
std::uint64_t checked_pow2(Integer exponent);

}  // namespace springer_kit
