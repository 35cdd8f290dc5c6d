#include "springer_kit/cuspidal.hpp"

#include <algorithm>
#include <functional>

#include "springer_kit/springer.hpp"

namespace springer_kit {

namespace {

// Largest x with x*x <= v, for v >= 0.
Integer isqrt(Integer v) {
  Integer lo = 0;
  Integer hi = std::min<Integer>(v, 3037000499);  // floor(sqrt(2^63 - 1))
  while (lo < hi) {
    const Integer mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= v) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

void require_non_negative(Integer e, Integer f) {
  if (e < 0 || f < 0) {
    throw Error(ErrorCode::WrongParameters, "e and f must be non-negative");
  }
}

std::vector<Integer> iota_row(Integer first, Integer last) {
  std::vector<Integer> out;
  for (Integer v = first; v <= last; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::optional<CuspidalParameters> cuspidal_parameters(Integer a, Integer b) {
  if (a < 0 || b < 0) return std::nullopt;
  // e(e+1) <= a < (e+1)^2, so e = isqrt(a) is the only candidate.
  const Integer e = isqrt(a);
  const Integer f = isqrt(b);
  if (e * (e + 1) != a || f * f != b) return std::nullopt;
  return CuspidalParameters{e, f, e >= 1 || f >= 2};
}

std::pair<Symbol, Symbol> special_character(Integer e, Integer f) {
  require_non_negative(e, f);
  Symbol b_factor = make_symbol(0, 0, iota_row(0, e), iota_row(1, e));
  Symbol d_factor = f == 0
                        ? unit_symbol(0, 0, 1)
                        : make_symbol(0, 0, iota_row(1, f), iota_row(1, f - 1));
  return {std::move(b_factor), std::move(d_factor)};
}

Integer generic_denominator_exponent(Integer e, Integer f) {
  require_non_negative(e, f);
  return checked_add(e, f) - (f == 0 ? 0 : 1);
}

std::uint64_t generic_denominator(Integer e, Integer f) {
  return checked_pow2(generic_denominator_exponent(e, f));
}

CuspidalDatum make_cuspidal_datum(Integer e, Integer f) {
  require_non_negative(e, f);
  auto [special_b, special_d] = special_character(e, f);
  const Integer a = checked_mul(e, checked_add(e, 1));
  const Integer b = checked_mul(f, f);
  return CuspidalDatum{
      .e = e,
      .f = f,
      .a = a,
      .b = b,
      .n = checked_add(a, b),
      .special_b = std::move(special_b),
      .special_d = std::move(special_d),
      .n_chi = generic_denominator(e, f),
      .cuspidal_exists = e >= 1 || f >= 2,
  };
}

Symbol j_induce(const Symbol& x, const Symbol& y) {
  for (const Symbol* factor : {&x, &y}) {
    if (factor->r() != 0 || factor->s() != 0 || factor->defect() != 1) {
      throw Error(ErrorCode::WrongParameters,
                  display(*factor) + " is not an r = s = 0, d = 1 symbol");
    }
  }
  return add(x, y);
}

Partition closed_form_mu(Integer e, Integer f) {
  require_non_negative(e, f);
  std::vector<Integer> parts;
  Integer paired_up_to = 0;  // 1,1,2,2,..,paired_up_to,paired_up_to
  Integer run_first = 0;     // then run_first, .., run_last
  Integer run_last = -1;
  if (e < f) {
    const Integer k = f - e;
    paired_up_to = k - 1;
    run_first = k;
    run_last = k + 2 * e;
  } else {
    const Integer k = e - f;
    paired_up_to = k;
    run_first = k + 1;
    run_last = k + 2 * f;
  }
  for (Integer v = 1; v <= paired_up_to; ++v) {
    parts.push_back(v);
    parts.push_back(v);
  }
  for (Integer v = run_first; v <= run_last; ++v) parts.push_back(v);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return validate_partition(parts);
}

namespace {

// lambda / 2, or nullopt when some part is odd.
std::optional<Partition> halved(const Partition& lambda) {
  std::vector<Integer> parts;
  for (Integer part : lambda.parts()) {
    if (part % 2 != 0) return std::nullopt;
    parts.push_back(part / 2);
  }
  return validate_partition(parts);
}

}  // namespace

VerificationReport verify_multiplicity_one(Integer e, Integer f) {
  CuspidalDatum datum = make_cuspidal_datum(e, f);
  Symbol j_symbol = j_induce(datum.special_b, datum.special_d);
  const Bipartition source = symbol_to_bipartition(j_symbol);
  Symbol springer_symbol = springer(source).symbol;
  SymplecticClassLabel lambda = wavefront_partition(springer_symbol);
  const std::uint64_t a_order = component_group_order(lambda);

  const auto mu = halved(lambda.partition());
  const bool mu_matches = mu.has_value() && *mu == closed_form_mu(e, f);
  const bool identity = a_order == datum.n_chi;
  return VerificationReport{
      .datum = std::move(datum),
      .j_symbol = std::move(j_symbol),
      .springer_symbol = std::move(springer_symbol),
      .lambda = lambda,
      .mu = mu.value_or(Partition{}),
      .a_order = a_order,
      .identity_holds = identity,
      .mu_matches_closed_form = mu_matches,
  };
}

std::vector<VerificationReport> sweep(Integer max_n, Integer bound) {
  if (max_n < 0 || max_n > bound) {
    throw Error(ErrorCode::BoundExceeded, "max_n = " + std::to_string(max_n) +
                                              " outside [0, " +
                                              std::to_string(bound) + "]");
  }
  std::vector<VerificationReport> out;
  for (Integer n = 0; n <= max_n; ++n) {
    for (Integer e = 0; e * (e + 1) <= n; ++e) {
      const Integer b = n - e * (e + 1);
      const Integer f = isqrt(b);
      if (f * f == b) out.push_back(verify_multiplicity_one(e, f));
    }
  }
  return out;
}

}  // namespace springer_kit
