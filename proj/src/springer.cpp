#include "springer_kit/springer.hpp"

#include <algorithm>
#include <functional>

namespace springer_kit {

SpringerImage springer(const Bipartition& bp) {
  return {add(bipartition_to_symbol(bp), unit_symbol(1, 1, 1)), bp};
}

bool is_springer_image(const Symbol& x) {
  return x.r() == 1 && x.s() == 1 && x.defect() == 1;
}

bool is_springer_image(Integer r, Integer s, std::span<const Integer> top,
                       std::span<const Integer> bottom) {
  try {
    return is_springer_image(
        make_symbol(r, s, std::vector<Integer>(top.begin(), top.end()),
                    std::vector<Integer>(bottom.begin(), bottom.end())));
  } catch (const Error&) {
    return false;
  }
}

Bipartition springer_inverse(const Symbol& x) {
  if (!is_springer_image(x)) {
    throw Error(ErrorCode::NotInImage,
                display(x) + " is not an r = s = 1, d = 1 symbol");
  }
  const Symbol rep = canonical(x);
  const Symbol staircase = shift_to(unit_symbol(1, 1, 1), rep.m());
  auto subtract = [](const std::vector<Integer>& lhs,
                     const std::vector<Integer>& rhs) {
    std::vector<Integer> out(lhs.size());
    std::transform(lhs.begin(), lhs.end(), rhs.begin(), out.begin(),
                   std::minus<>());
    return out;
  };
  try {
    const Symbol source =
        make_symbol(0, 0, subtract(rep.top(), staircase.top()),
                    subtract(rep.bottom(), staircase.bottom()));
    return symbol_to_bipartition(source);
  } catch (const Error& err) {
    throw Error(ErrorCode::NotInImage,
                display(x) + " minus the staircase is invalid: " + err.what());
  }
}

SymplecticClassLabel wavefront_partition(const Symbol& x) {
  if (!is_springer_image(x)) {
    throw Error(ErrorCode::WrongParameters,
                display(x) + " is not an r = s = 1, d = 1 symbol");
  }
  const auto entries = x.merged_entries();
  if (std::adjacent_find(entries.begin(), entries.end()) != entries.end()) {
    throw Error(ErrorCode::RepeatedEntries,
                display(x) + " has repeated entries");
  }
  std::vector<Integer> parts;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Integer value = checked_sub(checked_mul(entries[i], 2),
                                      checked_mul(static_cast<Integer>(i), 2));
    if (value != 0) parts.push_back(value);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return SymplecticClassLabel(validate_partition(parts));
}

}  // namespace springer_kit
