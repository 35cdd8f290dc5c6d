#pragma once

#include <span>

#include "springer_kit/partition.hpp"
#include "springer_kit/symbol.hpp"

namespace springer_kit {

/// Springer correspondent of a bipartition: its r = s = 0 symbol plus the
/// r = s = 1 unit [0;].
struct SpringerImage {
  Symbol symbol;
  Bipartition source;
};

SpringerImage springer(const Bipartition& bp);

/// True iff x has r = s = 1 and d = 1 (a Symbol is valid by construction).
bool is_springer_image(const Symbol& x);

/// Raw-row form: also false when the rows violate the symbol conditions.
bool is_springer_image(Integer r, Integer s, std::span<const Integer> top,
                       std::span<const Integer> bottom);

/// Subtracts the staircase [0,2,..,2m; 1,3,..,2m-1] and reads off the
/// bipartition. Throws NotInImage.
Bipartition springer_inverse(const Symbol& x);

/// Sort the entries c_0 <= ... <= c_t, form (2c_i - 2i), drop zeros and sort
/// decreasingly. Only the case of pairwise distinct entries is handled;
/// anything else throws RepeatedEntries. Throws WrongParameters unless
/// r = s = 1 and d = 1.
SymplecticClassLabel wavefront_partition(const Symbol& x);

}  // namespace springer_kit
