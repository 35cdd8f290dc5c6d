#pragma once

#include <span>
#include <string>
#include <vector>

#include "springer_kit/error.hpp"
#include "springer_kit/partition.hpp"

namespace springer_kit {

/// A symbol [A;B] with parameters (r, s). Rows are stored weakly increasing,
/// exactly as displayed. With m = |B| and d = |A| - |B|, a valid symbol
/// satisfies
///
///   a_i - a_{i-1} >= r+s,   b_i - b_{i-1} >= r+s,   b_1 >= s,
///   sum(A) + sum(B) = rank + r(m+e)(m+d-e-1) + s(m+e)(m+d-e),  e = floor(d/2)
///
/// with rank >= 0. A Symbol is one representative of its shift class; use
/// canonical() to compare classes.
class Symbol {
 public:
  Integer r() const noexcept { return r_; }
  Integer s() const noexcept { return s_; }
  const std::vector<Integer>& top() const noexcept { return top_; }
  const std::vector<Integer>& bottom() const noexcept { return bottom_; }

  /// |B|
  Integer m() const noexcept { return static_cast<Integer>(bottom_.size()); }
  /// |A| - |B|
  Integer defect() const noexcept {
    return static_cast<Integer>(top_.size()) - m();
  }
  Integer rank() const noexcept { return rank_; }

  /// All entries of both rows, sorted ascending.
  std::vector<Integer> merged_entries() const;

  /// Representative equality (not class equality).
  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  Symbol(Integer r, Integer s, std::vector<Integer> top,
         std::vector<Integer> bottom, Integer rank)
      : r_(r),
        s_(s),
        top_(std::move(top)),
        bottom_(std::move(bottom)),
        rank_(rank) {}

  friend Symbol make_symbol(Integer, Integer, std::vector<Integer>,
                            std::vector<Integer>);

  Integer r_ = 0;
  Integer s_ = 0;
  std::vector<Integer> top_;
  std::vector<Integer> bottom_;
  Integer rank_ = 0;
};

/// Validates the gap, bottom-entry and rank conditions and solves for the
/// rank. Throws WrongParameters (r or s negative), NegativeEntry,
/// GapViolation, BottomEntryTooSmall or NegativeRank.
Symbol make_symbol(Integer r, Integer s, std::vector<Integer> top,
                   std::vector<Integer> bottom);

/// r(m+e)(m+d-e-1) + s(m+e)(m+d-e) with e = floor(d/2).
Integer rank_correction(Integer r, Integer s, Integer m, Integer d);

/// "[0,3;2]"; an empty row is written as the empty set sign.
std::string display(const Symbol& x);

/// [A;B] -> [0, a_i + r+s; s, b_i + r+s]
Symbol shift(const Symbol& x);

/// Shift until |B| = m. Requires m >= x.m().
Symbol shift_to(const Symbol& x, Integer m);

/// True iff m >= 1, a_1 = 0 and b_1 = s.
bool is_reducible(const Symbol& x);

/// Inverse of shift. Throws NotReducible.
Symbol unshift(const Symbol& x);

/// The fully unshifted representative of x's class.
Symbol canonical(const Symbol& x);

bool is_canonical(const Symbol& x);

/// Class equality. Throws ParameterMismatch for different (r, s).
bool equivalent(const Symbol& x, const Symbol& y);

/// Entrywise sum after shifting the operand with fewer rows; no
/// canonicalization. Parameters add. Throws DefectMismatch.
Symbol add_aligned(const Symbol& x, const Symbol& y);

/// canonical(add_aligned(x, y)).
Symbol add(const Symbol& x, const Symbol& y);

/// The unique rank-0 symbol for d in {0, 1}: [;] and [0;]. Throws
/// WrongParameters for other defects.
Symbol unit_symbol(Integer r, Integer s, Integer d);

/// Bipartition (alpha, beta) -> canonical [A;B] with r = s = 0, d = 1. The
/// rows hold the parts in increasing order, zero-padded to m+1 and m.
Symbol bipartition_to_symbol(const Bipartition& bp);

/// Inverse of bipartition_to_symbol on any representative. Throws
/// WrongParameters unless r = s = 0 and d = 1.
Bipartition symbol_to_bipartition(const Symbol& x);

/// Membership in the type-D subset: sum(A) > sum(B) on the canonical
/// representative. Throws WrongParameters unless r = s = 0 and d = 1.
bool is_y_symbol(const Symbol& x);

}  // namespace springer_kit
