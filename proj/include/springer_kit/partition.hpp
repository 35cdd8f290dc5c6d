#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "springer_kit/error.hpp"

namespace springer_kit {

/// Default upper bound on the half-rank n accepted by class enumeration.
inline constexpr Integer kDefaultClassBound = 30;

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0. Instances can only be obtained through
/// validate_partition (or helpers that preserve the invariant).
class Partition {
 public:
  Partition() = default;

  const std::vector<Integer>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Integer rank() const;

  /// Number of parts equal to `value`.
  Integer multiplicity(Integer value) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Integer> parts) : parts_(std::move(parts)) {}

  friend Partition validate_partition(std::span<const Integer> parts);

  std::vector<Integer> parts_;
};

/// Rejects (never sorts) unsorted input. Throws NotSorted / NonPositivePart.
Partition validate_partition(std::span<const Integer> parts);

inline Partition validate_partition(std::initializer_list<Integer> parts) {
  return validate_partition(
      std::span<const Integer>(parts.begin(), parts.size()));
}

/// Display form "[6,4,2]"; the empty partition is "[]".
std::string to_string(const Partition& p);

/// Ordered pair of partitions.
struct Bipartition {
  Partition first;
  Partition second;

  Integer rank() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// "[[3,1],[2]]"
std::string to_string(const Bipartition& bp);

/// Every bipartition of n: decreasing rank of the first component, then
/// decreasing lexicographic order within each component.
std::vector<Bipartition> enumerate_bipartitions(Integer n);

/// Every partition of n in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(Integer n);

/// True iff the rank is even and every odd part has even multiplicity.
bool is_symplectic_class(const Partition& p);

/// A partition of 2n labelling a unipotent class of Sp_2n.
class SymplecticClassLabel {
 public:
  /// Throws NotSymplectic when is_symplectic_class(p) fails.
  explicit SymplecticClassLabel(Partition p);

  const Partition& partition() const noexcept { return partition_; }
  Integer half_rank() const noexcept { return half_rank_; }

  friend bool operator==(const SymplecticClassLabel&,
                         const SymplecticClassLabel&) = default;

 private:
  Partition partition_;
  Integer half_rank_ = 0;
};

/// All of P_1(2n), strictly decreasing lexicographically, e.g. n = 2 gives
/// (4), (2,2), (2,1,1), (1,1,1,1). Throws BoundExceeded when n > bound.
std::vector<SymplecticClassLabel> enumerate_symplectic_classes(
    Integer n, Integer bound = kDefaultClassBound);

struct ComponentData {
  Integer n_u = 0;      // distinct even part sizes
  Integer delta_u = 0;  // 1 iff some even part has odd multiplicity

  friend bool operator==(const ComponentData&, const ComponentData&) = default;
};

ComponentData n_delta(const SymplecticClassLabel& label);

/// log2 |A(u)| = n_u - delta_u.
Integer component_group_exponent(const SymplecticClassLabel& label);

/// |A(u)| = 2^(n_u - delta_u). Throws Overflow past 2^63.
std::uint64_t component_group_order(const SymplecticClassLabel& label);

/// Every part doubled: mu -> 2 mu.
Partition doubled(const Partition& mu);

}  // namespace springer_kit
