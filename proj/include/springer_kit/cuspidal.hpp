#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "springer_kit/partition.hpp"
#include "springer_kit/symbol.hpp"

namespace springer_kit {

/// Default upper bound on max_n accepted by sweep(). Keeps every generic
/// denominator and component-group order inside 64 bits.
inline constexpr Integer kDefaultSweepBound = 1000;

struct CuspidalParameters {
  Integer e = 0;
  Integer f = 0;
  bool cuspidal_exists = false;

  friend bool operator==(const CuspidalParameters&,
                         const CuspidalParameters&) = default;
};

/// Solves a = e(e+1), b = f^2. Absent unless a is pronic and b a square.
std::optional<CuspidalParameters> cuspidal_parameters(Integer a, Integer b);

/// The special characters of the B_a and D_b factors:
///   [0,1,..,e; 1,..,e]  and  [1,..,f; 1,..,f-1]
/// with f = 0 read as the unit [0;]. Both have r = s = 0, d = 1.
std::pair<Symbol, Symbol> special_character(Integer e, Integer f);

/// Exponent e + f - Delta(f), Delta(f) = [f != 0].
Integer generic_denominator_exponent(Integer e, Integer f);

/// 2^(e + f - Delta(f)).
std::uint64_t generic_denominator(Integer e, Integer f);

struct CuspidalDatum {
  Integer e = 0;
  Integer f = 0;
  Integer a = 0;  // e(e+1)
  Integer b = 0;  // f^2
  Integer n = 0;  // a + b
  Symbol special_b;
  Symbol special_d;
  std::uint64_t n_chi = 1;
  bool cuspidal_exists = false;

  friend bool operator==(const CuspidalDatum&, const CuspidalDatum&) = default;
};

/// Throws WrongParameters for negative e or f.
CuspidalDatum make_cuspidal_datum(Integer e, Integer f);

/// j-induction from W(B_a) x W(D_b) to W(B_n) on the symbol level: the sum
/// of the two factor symbols. Throws WrongParameters unless both are
/// r = s = 0, d = 1.
Symbol j_induce(const Symbol& x, const Symbol& y);

/// mu with lambda = 2 mu for the wave front class, in closed form:
///   e <  f, k = f - e:  1,1,..,k-1,k-1 and k,k+1,..,k+2e
///   f <= e, k = e - f:  1,1,..,k,k     and k+1,..,k+2f
Partition closed_form_mu(Integer e, Integer f);

struct VerificationReport {
  CuspidalDatum datum;
  Symbol j_symbol;
  Symbol springer_symbol;
  SymplecticClassLabel lambda;
  Partition mu;
  std::uint64_t a_order = 1;
  bool identity_holds = false;
  bool mu_matches_closed_form = false;
};

/// special_character -> j_induce -> springer -> wavefront_partition ->
/// component_group_order, checked against the generic denominator and
/// against closed_form_mu. RepeatedEntries propagates.
VerificationReport verify_multiplicity_one(Integer e, Integer f);

/// Reports for every (e, f) with e(e+1) + f^2 <= max_n, ordered by (n, e).
/// Throws BoundExceeded when max_n is negative or above bound.
std::vector<VerificationReport> sweep(Integer max_n,
                                      Integer bound = kDefaultSweepBound);

}  // namespace springer_kit
