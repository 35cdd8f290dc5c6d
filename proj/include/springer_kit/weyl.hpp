#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "springer_kit/error.hpp"

namespace springer_kit {

/// Largest rank for which W(B_n) is enumerated exhaustively (order 645120).
inline constexpr int kMaxWeylRank = 7;

/// Element of W(B_n) in one-line notation: images of 1..n in {+-1..+-n},
/// extended by w(-i) = -w(i). Composition is (x * y)(i) = x(y(i)).
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(int n);
  /// Throws WrongParameters unless |images| is a permutation of 1..n.
  static SignedPermutation from_images(std::span<const int> images);

  int rank() const noexcept { return rank_; }
  /// Image of i for 1 <= |i| <= n.
  int operator()(int i) const noexcept {
    return i > 0 ? images_[i - 1] : -images_[-i - 1];
  }
  std::vector<int> images() const;

  SignedPermutation operator*(const SignedPermutation& rhs) const;
  SignedPermutation inverse() const;

  /// Injective packing, used for hashing and lookup.
  std::uint32_t key() const noexcept;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

 private:
  std::array<std::int8_t, kMaxWeylRank> images_{};
  std::int8_t rank_ = 0;
};

/// A root sum_k c_k e_k of B_n with c_k in {-1, 0, 1}: +-e_i or +-e_i +- e_j.
struct Root {
  std::vector<int> coefficients;

  friend bool operator==(const Root&, const Root&) = default;
};

/// s_alpha as a signed permutation of the basis e_1..e_n.
SignedPermutation reflection(const Root& alpha);

/// A finite set of signed permutations closed under multiplication.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<SignedPermutation> elements);

  const std::vector<SignedPermutation>& elements() const noexcept {
    return elements_;
  }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const SignedPermutation& w) const;
  /// Position of w in elements(), or -1.
  std::ptrdiff_t index_of(const SignedPermutation& w) const;

 private:
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// Closure of `generators` (all of rank n) under multiplication.
Subgroup generate_subgroup(int n,
                           std::span<const SignedPermutation> generators);

/// g H g^-1 = H for all g in `group`, tested on generators of H.
bool is_normal_subgroup(const Subgroup& group, const Subgroup& subgroup,
                        std::span<const SignedPermutation> subgroup_generators);

/// W(B_n), enumerated.
class WeylGroupB {
 public:
  /// Throws BoundExceeded unless 0 <= n <= kMaxWeylRank.
  explicit WeylGroupB(int n);

  int rank() const noexcept { return rank_; }
  const Subgroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }
  /// All 2n^2 roots.
  const std::vector<Root>& roots() const noexcept { return roots_; }
  /// One reflection per positive root (n^2 of them).
  const std::vector<SignedPermutation>& reflections() const noexcept {
    return reflections_;
  }

 private:
  int rank_ = 0;
  Subgroup group_;
  std::vector<Root> roots_;
  std::vector<SignedPermutation> reflections_;
};

WeylGroupB weyl_group(int n);

/// s in T* with s^2 = 1: eigenvalue +1 with multiplicity a on the first
/// coordinates, -1 with multiplicity b on the rest. C(s) has type B_a D_b.
struct InvolutionDatum {
  int n = 0;
  int a = 0;
  int b = 0;
  std::vector<int> sign_vector;

  friend bool operator==(const InvolutionDatum&,
                         const InvolutionDatum&) = default;
};

/// Throws WrongParameters for negative a or b.
InvolutionDatum make_involution(int a, int b);

/// (n,0), (n-1,1), .., (0,n).
std::vector<InvolutionDatum> enumerate_quasi_isolated(int n);

/// alpha(s) in {+1, -1}.
int evaluate_root(const Root& alpha, const InvolutionDatum& s);

struct CentralizerWeyl {
  /// W(s): stabilizer of s.
  Subgroup centralizer;
  /// W°(s): generated by the reflections s_alpha with alpha(s) = 1.
  Subgroup connected;
  std::vector<SignedPermutation> connected_generators;
};

/// Throws BoundExceeded above kMaxWeylRank.
CentralizerWeyl centralizer_weyl(const InvolutionDatum& s);

/// Finite group on labels 0..order-1 given by its multiplication table;
/// label 0 is the identity.
class FiniteGroup {
 public:
  /// Throws WrongParameters unless the table is a group with identity 0.
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int order);
  static FiniteGroup direct_product(const FiniteGroup& lhs,
                                    const FiniteGroup& rhs);

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int multiply(int x, int y) const { return table_.at(x).at(y); }
  int inverse(int x) const { return inverses_.at(x); }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
};

/// A(s) = W(s) / W°(s). Coset label i has representative
/// coset_representatives[i]; label 0 is W°(s).
struct ComponentGroup {
  FiniteGroup group;
  std::vector<SignedPermutation> coset_representatives;
};

/// Throws BoundExceeded above kMaxWeylRank, WrongParameters if W°(s) is not
/// normal in W(s).
ComponentGroup component_group_A(const InvolutionDatum& s);

/// Orbits of the twisted action x . z = x^-1 z F(x), where F is given by
/// action[z]. Returns the smallest label of each orbit, ascending. Throws
/// WrongParameters unless `action` is an automorphism.
std::vector<int> h1_orbits(const FiniteGroup& group,
                           std::span<const int> action);

/// The identity map on labels.
std::vector<int> trivial_action(const FiniteGroup& group);

struct SeriesLabel {
  InvolutionDatum involution;
  int a_order = 1;
  int h1_class = 0;

  friend bool operator==(const SeriesLabel&, const SeriesLabel&) = default;
};

/// One label per quasi-isolated s and H^1 class of A(s) under the split
/// Frobenius. Throws BoundExceeded above kMaxWeylRank.
std::vector<SeriesLabel> series_labels(int n);

/// Levi GL_1^(n-k) x Sp_2k, k = e(e+1), with relative Weyl group B_(n-k).
struct HarishChandraDatum {
  int n = 0;
  int e = 0;
  int k = 0;
  int gl1_factors = 0;
  int symplectic_rank = 0;
  int relative_weyl_rank = 0;

  friend bool operator==(const HarishChandraDatum&,
                         const HarishChandraDatum&) = default;
};

/// Throws RankExceeded when e(e+1) > n or either argument is negative.
HarishChandraDatum harish_chandra_levi(int n, int e);

}  // namespace springer_kit
