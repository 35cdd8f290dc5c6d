#include "springer_kit/error.hpp"

namespace springer_kit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSorted:
      return "NotSorted";
    case ErrorCode::NonPositivePart:
      return "NonPositivePart";
    case ErrorCode::NotSymplectic:
      return "NotSymplectic";
    case ErrorCode::BoundExceeded:
      return "BoundExceeded";
    case ErrorCode::NegativeEntry:
      return "NegativeEntry";
    case ErrorCode::GapViolation:
      return "GapViolation";
    case ErrorCode::BottomEntryTooSmall:
      return "BottomEntryTooSmall";
    case ErrorCode::NegativeRank:
      return "NegativeRank";
    case ErrorCode::NotReducible:
      return "NotReducible";
    case ErrorCode::ParameterMismatch:
      return "ParameterMismatch";
    case ErrorCode::DefectMismatch:
      return "DefectMismatch";
    case ErrorCode::WrongParameters:
      return "WrongParameters";
    case ErrorCode::NotInImage:
      return "NotInImage";
    case ErrorCode::RepeatedEntries:
      return "RepeatedEntries";
    case ErrorCode::RankExceeded:
      return "RankExceeded";
    case ErrorCode::Overflow:
      return "Overflow";
    case ErrorCode::ParseError:
      return "ParseError";
  }
  return "Unknown";
}

Integer checked_add(Integer lhs, Integer rhs) {
  Integer out = 0;
  if (__builtin_add_overflow(lhs, rhs, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return out;
}

Integer checked_sub(Integer lhs, Integer rhs) {
  Integer out = 0;
  if (__builtin_sub_overflow(lhs, rhs, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  }
  return out;
}

Integer checked_mul(Integer lhs, Integer rhs) {
  Integer out = 0;
  if (__builtin_mul_overflow(lhs, rhs, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return out;
}

std::uint64_t checked_pow2(Integer exponent) {
  if (exponent < 0 || exponent > 63) {
    throw Error(ErrorCode::Overflow,
                "2^" + std::to_string(exponent) + " does not fit in 64 bits");
  }
  return std::uint64_t{1} << exponent;
}

}  // namespace springer_kit
