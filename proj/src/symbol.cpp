#include "springer_kit/symbol.hpp"

#include <algorithm>

namespace springer_kit {

namespace {

Integer floor_half(Integer d) { return d >= 0 ? d / 2 : -((-d + 1) / 2); }

Integer row_sum(const std::vector<Integer>& row) {
  Integer total = 0;
  for (Integer v : row) total = checked_add(total, v);
  return total;
}

void check_gaps(const std::vector<Integer>& row, Integer gap,
                const char* name) {
  for (std::size_t i = 1; i < row.size(); ++i) {
    if (row[i] - row[i - 1] < gap) {
      throw Error(ErrorCode::GapViolation,
                  std::string(name) + " row gap at index " + std::to_string(i) +
                      " is " + std::to_string(row[i] - row[i - 1]) +
                      ", need at least " + std::to_string(gap));
    }
  }
}

std::string join_row(const std::vector<Integer>& row) {
  if (row.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(row[i]);
  }
  return out;
}

}  // namespace

std::vector<Integer> Symbol::merged_entries() const {
  std::vector<Integer> out(top_);
  out.insert(out.end(), bottom_.begin(), bottom_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Integer rank_correction(Integer r, Integer s, Integer m, Integer d) {
  const Integer e = floor_half(d);
  const Integer me = checked_add(m, e);
  const Integer r_term =
      checked_mul(checked_mul(r, me), checked_sub(checked_add(m, d), e + 1));
  const Integer s_term =
      checked_mul(checked_mul(s, me), checked_sub(checked_add(m, d), e));
  return checked_add(r_term, s_term);
}

Symbol make_symbol(Integer r, Integer s, std::vector<Integer> top,
                   std::vector<Integer> bottom) {
  if (r < 0 || s < 0) {
    throw Error(ErrorCode::WrongParameters, "r and s must be non-negative");
  }
  for (const auto* row : {&top, &bottom}) {
    for (Integer v : *row) {
      if (v < 0) {
        throw Error(ErrorCode::NegativeEntry,
                    "symbol entry " + std::to_string(v) + " is negative");
      }
    }
  }
  const Integer gap = checked_add(r, s);
  check_gaps(top, gap, "top");
  check_gaps(bottom, gap, "bottom");
  if (!bottom.empty() && bottom.front() < s) {
    throw Error(ErrorCode::BottomEntryTooSmall,
                "b_1 = " + std::to_string(bottom.front()) +
                    " < s = " + std::to_string(s));
  }
  const Integer m = static_cast<Integer>(bottom.size());
  const Integer d = static_cast<Integer>(top.size()) - m;
  const Integer rank = checked_sub(checked_add(row_sum(top), row_sum(bottom)),
                                   rank_correction(r, s, m, d));
  if (rank < 0) {
    throw Error(ErrorCode::NegativeRank,
                "entries too small: rank would be " + std::to_string(rank));
  }
  return Symbol(r, s, std::move(top), std::move(bottom), rank);
}

std::string display(const Symbol& x) {
  return "[" + join_row(x.top()) + ";" + join_row(x.bottom()) + "]";
}

Symbol shift(const Symbol& x) {
  const Integer step = checked_add(x.r(), x.s());
  std::vector<Integer> top{0};
  std::vector<Integer> bottom{x.s()};
  for (Integer a : x.top()) top.push_back(checked_add(a, step));
  for (Integer b : x.bottom()) bottom.push_back(checked_add(b, step));
  return make_symbol(x.r(), x.s(), std::move(top), std::move(bottom));
}

Symbol shift_to(const Symbol& x, Integer m) {
  Symbol out = x;
  while (out.m() < m) out = shift(out);
  return out;
}

bool is_reducible(const Symbol& x) {
  return x.m() >= 1 && !x.top().empty() && x.top().front() == 0 &&
         x.bottom().front() == x.s();
}

Symbol unshift(const Symbol& x) {
  if (!is_reducible(x)) {
    throw Error(ErrorCode::NotReducible,
                display(x) + " is not the shift of another symbol");
  }
  const Integer step = x.r() + x.s();
  std::vector<Integer> top;
  std::vector<Integer> bottom;
  for (std::size_t i = 1; i < x.top().size(); ++i) {
    top.push_back(x.top()[i] - step);
  }
  for (std::size_t i = 1; i < x.bottom().size(); ++i) {
    bottom.push_back(x.bottom()[i] - step);
  }
  return make_symbol(x.r(), x.s(), std::move(top), std::move(bottom));
}

Symbol canonical(const Symbol& x) {
  Symbol out = x;
  while (is_reducible(out)) out = unshift(out);
  return out;
}

bool is_canonical(const Symbol& x) { return !is_reducible(x); }

bool equivalent(const Symbol& x, const Symbol& y) {
  if (x.r() != y.r() || x.s() != y.s()) {
    throw Error(ErrorCode::ParameterMismatch,
                "cannot compare symbols with different (r, s)");
  }
  return canonical(x) == canonical(y);
}

Symbol add_aligned(const Symbol& x, const Symbol& y) {
  if (x.defect() != y.defect()) {
    throw Error(ErrorCode::DefectMismatch,
                "defects " + std::to_string(x.defect()) + " and " +
                    std::to_string(y.defect()) + " differ");
  }
  const Integer m = std::max(x.m(), y.m());
  const Symbol lhs = shift_to(x, m);
  const Symbol rhs = shift_to(y, m);
  std::vector<Integer> top(lhs.top().size());
  std::vector<Integer> bottom(lhs.bottom().size());
  for (std::size_t i = 0; i < top.size(); ++i) {
    top[i] = checked_add(lhs.top()[i], rhs.top()[i]);
  }
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    bottom[i] = checked_add(lhs.bottom()[i], rhs.bottom()[i]);
  }
  return make_symbol(checked_add(x.r(), y.r()), checked_add(x.s(), y.s()),
                     std::move(top), std::move(bottom));
}

Symbol add(const Symbol& x, const Symbol& y) {
  return canonical(add_aligned(x, y));
}

Symbol unit_symbol(Integer r, Integer s, Integer d) {
  if (d == 0) return make_symbol(r, s, {}, {});
  if (d == 1) return make_symbol(r, s, {0}, {});
  throw Error(ErrorCode::WrongParameters,
              "unit symbols exist only for defect 0 or 1");
}

Symbol bipartition_to_symbol(const Bipartition& bp) {
  const Integer alpha_len = static_cast<Integer>(bp.first.length());
  const Integer beta_len = static_cast<Integer>(bp.second.length());
  const Integer m = std::max({alpha_len - 1, beta_len, Integer{0}});

  auto row = [](const Partition& p, Integer length) {
    std::vector<Integer> out(static_cast<std::size_t>(length) - p.length(), 0);
    out.insert(out.end(), p.parts().rbegin(), p.parts().rend());
    return out;
  };
  return make_symbol(0, 0, row(bp.first, m + 1), row(bp.second, m));
}

namespace {

void require_weyl_b_parameters(const Symbol& x) {
  if (x.r() != 0 || x.s() != 0 || x.defect() != 1) {
    throw Error(ErrorCode::WrongParameters,
                display(x) + " is not an r = s = 0, d = 1 symbol");
  }
}

Partition row_to_partition(const std::vector<Integer>& row) {
  std::vector<Integer> parts;
  for (auto it = row.rbegin(); it != row.rend(); ++it) {
    if (*it != 0) parts.push_back(*it);
  }
  return validate_partition(parts);
}

}  // namespace

Bipartition symbol_to_bipartition(const Symbol& x) {
  require_weyl_b_parameters(x);
  return {row_to_partition(x.top()), row_to_partition(x.bottom())};
}

bool is_y_symbol(const Symbol& x) {
  require_weyl_b_parameters(x);
  const Symbol c = canonical(x);
  return row_sum(c.top()) > row_sum(c.bottom());
}

}  // namespace springer_kit
