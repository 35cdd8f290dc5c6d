#include "springer_kit/symbol.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace springer_kit;
using test_support::code_of;

Symbol sym(Integer r, Integer s, std::vector<Integer> top,
           std::vector<Integer> bottom) {
  return make_symbol(r, s, std::move(top), std::move(bottom));
}

Bipartition bip(std::initializer_list<Integer> alpha,
                std::initializer_list<Integer> beta) {
  return {validate_partition(alpha), validate_partition(beta)};
}

Symbol random_symbol(std::mt19937_64& rng, Integer max_rank = 30) {
  std::uniform_int_distribution<Integer> param(0, 2);
  std::uniform_int_distribution<Integer> defect(-1, 3);
  const auto raw =
      oracle::random_symbol(rng, param(rng), param(rng), defect(rng), max_rank);
  Symbol x = make_symbol(raw.r, raw.s, raw.top, raw.bottom);
  EXPECT_EQ(x.rank(), raw.rank);
  return x;
}

TEST(Symbol, MakeComputesDefectAndRank) {
  const Symbol x = sym(1, 1, {0, 3}, {2});
  EXPECT_EQ(x.defect(), 1);
  EXPECT_EQ(x.m(), 1);
  EXPECT_EQ(x.rank(), 2);

  const Symbol unit = sym(1, 1, {0}, {});
  EXPECT_EQ(unit.rank(), 0);
  EXPECT_EQ(unit, unit_symbol(1, 1, 1));
  EXPECT_EQ(unit_symbol(2, 0, 0).rank(), 0);
}

TEST(Symbol, MakeRejectsInvalidRows) {
  EXPECT_EQ(code_of([] { sym(1, 1, {0, 1}, {}); }), ErrorCode::GapViolation);
  EXPECT_EQ(code_of([] { sym(1, 1, {0, 3}, {1, 2}); }),
            ErrorCode::GapViolation);
  EXPECT_EQ(code_of([] { sym(0, 0, {1, 0}, {}); }), ErrorCode::GapViolation);
  EXPECT_EQ(code_of([] { sym(1, 1, {0, 2}, {0}); }),
            ErrorCode::BottomEntryTooSmall);
  EXPECT_EQ(code_of([] { sym(0, 0, {-1}, {}); }), ErrorCode::NegativeEntry);
  EXPECT_EQ(code_of([] { sym(-1, 0, {0}, {}); }), ErrorCode::WrongParameters);
  EXPECT_EQ(code_of([] { unit_symbol(1, 1, 2); }), ErrorCode::WrongParameters);
}

TEST(Symbol, Display) {
  EXPECT_EQ(display(sym(1, 1, {0, 3}, {2})), "[0,3;2]");
  EXPECT_EQ(display(sym(1, 1, {0}, {})), "[0;∅]");
}

TEST(Symbol, Shift) {
  EXPECT_EQ(shift(sym(1, 1, {0, 3}, {2})), sym(1, 1, {0, 2, 5}, {1, 4}));
  EXPECT_EQ(shift(sym(1, 1, {0}, {})), sym(1, 1, {0, 2}, {1}));
  EXPECT_EQ(shift(sym(0, 0, {1}, {})), sym(0, 0, {0, 1}, {0}));
}

TEST(Symbol, Unshift) {
  EXPECT_EQ(unshift(sym(1, 1, {0, 2, 5}, {1, 4})), sym(1, 1, {0, 3}, {2}));
  EXPECT_EQ(code_of([] { unshift(sym(1, 1, {0}, {})); }),
            ErrorCode::NotReducible);
  EXPECT_EQ(code_of([] { unshift(sym(1, 1, {1, 4}, {2})); }),
            ErrorCode::NotReducible);
  // Empty top row, bottom starting at s.
  EXPECT_FALSE(is_reducible(sym(0, 1, {}, {1})));
}

TEST(Symbol, Canonical) {
  EXPECT_EQ(canonical(sym(1, 1, {0, 2, 5}, {1, 4})), sym(1, 1, {0, 3}, {2}));
  EXPECT_EQ(canonical(sym(1, 1, {0, 3}, {2})), sym(1, 1, {0, 3}, {2}));
  EXPECT_EQ(canonical(sym(0, 0, {0, 0}, {0})), sym(0, 0, {0}, {}));
  EXPECT_TRUE(is_canonical(sym(0, 0, {0}, {})));
}

TEST(Symbol, Equivalent) {
  const Symbol x = sym(1, 1, {0, 3}, {2});
  EXPECT_TRUE(equivalent(x, sym(1, 1, {0, 2, 5}, {1, 4})));
  EXPECT_FALSE(equivalent(x, sym(1, 1, {0, 3}, {1})));
  EXPECT_TRUE(equivalent(x, x));
  EXPECT_EQ(code_of([&] { equivalent(x, sym(0, 0, {0, 3}, {2})); }),
            ErrorCode::ParameterMismatch);
}

TEST(Symbol, Add) {
  EXPECT_EQ(add(sym(0, 0, {0, 1}, {1}), sym(0, 0, {1, 2}, {1})),
            sym(0, 0, {1, 3}, {2}));

  const Symbol mixed = add(sym(0, 0, {1}, {}), sym(1, 1, {0}, {}));
  EXPECT_EQ(mixed, sym(1, 1, {1}, {}));
  EXPECT_EQ(mixed.rank(), 1);

  EXPECT_EQ(code_of([] { add(sym(0, 0, {1}, {}), sym(0, 0, {}, {})); }),
            ErrorCode::DefectMismatch);
}

TEST(Symbol, AddingTheRankZeroUnitIsTheIdentityOnClasses) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Symbol x = random_symbol(rng);
    if (x.defect() != 0 && x.defect() != 1) continue;
    const Symbol sum = add(x, unit_symbol(0, 0, x.defect()));
    EXPECT_TRUE(equivalent(sum, x)) << display(x);
    EXPECT_EQ(sum.rank(), x.rank());
  }
}

TEST(Symbol, BipartitionToSymbol) {
  EXPECT_EQ(bipartition_to_symbol(bip({1}, {})), sym(0, 0, {1}, {}));
  EXPECT_EQ(bipartition_to_symbol(bip({}, {})), sym(0, 0, {0}, {}));
  EXPECT_EQ(bipartition_to_symbol(bip({3, 2, 1}, {3, 2, 1})),
            sym(0, 0, {0, 1, 2, 3}, {1, 2, 3}));
  EXPECT_EQ(bipartition_to_symbol(bip({}, {2})), sym(0, 0, {0, 0}, {2}));
  EXPECT_EQ(bipartition_to_symbol(bip({2, 1}, {3})).rank(), 6);
}

TEST(Symbol, SymbolToBipartition) {
  EXPECT_EQ(symbol_to_bipartition(sym(0, 0, {1, 3}, {2})), bip({3, 1}, {2}));
  EXPECT_EQ(symbol_to_bipartition(sym(0, 0, {0}, {})), bip({}, {}));
  EXPECT_EQ(symbol_to_bipartition(sym(0, 0, {0, 1, 2}, {1, 2})),
            bip({2, 1}, {2, 1}));
  // Any representative works.
  EXPECT_EQ(symbol_to_bipartition(sym(0, 0, {0, 0, 1, 3}, {0, 0, 2})),
            bip({3, 1}, {2}));
  EXPECT_EQ(code_of([] { symbol_to_bipartition(sym(1, 1, {0}, {})); }),
            ErrorCode::WrongParameters);
  EXPECT_EQ(code_of([] { symbol_to_bipartition(sym(0, 0, {}, {})); }),
            ErrorCode::WrongParameters);
}

TEST(Symbol, BipartitionRoundTripExhaustive) {
  for (Integer n = 0; n <= 10; ++n) {
    for (const auto& bp : enumerate_bipartitions(n)) {
      const Symbol x = bipartition_to_symbol(bp);
      ASSERT_EQ(symbol_to_bipartition(x), bp);
      EXPECT_TRUE(is_canonical(x));
      EXPECT_EQ(x.rank(), n);
      EXPECT_EQ(x.defect(), 1);
    }
  }
}

TEST(Symbol, YSubset) {
  EXPECT_TRUE(is_y_symbol(sym(0, 0, {1, 2}, {1})));
  EXPECT_FALSE(is_y_symbol(sym(0, 0, {0}, {})));
  EXPECT_FALSE(is_y_symbol(sym(0, 0, {0, 1}, {1})));
  EXPECT_TRUE(is_y_symbol(shift(sym(0, 0, {1, 2}, {1}))));
  EXPECT_EQ(code_of([] { is_y_symbol(sym(1, 1, {0}, {})); }),
            ErrorCode::WrongParameters);
}

TEST(SymbolProperties, ShiftInvariantsOnRandomSymbols) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 3000; ++trial) {
    const Symbol x = random_symbol(rng);
    const Symbol shifted = shift(x);
    ASSERT_EQ(shifted.rank(), x.rank()) << display(x);
    EXPECT_EQ(shifted.defect(), x.defect());
    EXPECT_EQ(shifted.m(), x.m() + 1);
    EXPECT_EQ(unshift(shifted), x);
    if (is_reducible(x)) {
      EXPECT_EQ(shift(unshift(x)), x);
    }

    const Symbol c = canonical(x);
    EXPECT_EQ(canonical(c), c);
    EXPECT_EQ(canonical(shifted), c);
    EXPECT_TRUE(equivalent(x, shifted));
  }
}

TEST(SymbolProperties, AdditionOnRandomPairs) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Integer> param(0, 2);
  for (int trial = 0; trial < 2000; ++trial) {
    const Integer d = static_cast<Integer>(rng() % 3);
    const auto rx = oracle::random_symbol(rng, param(rng), param(rng), d, 15);
    const auto ry = oracle::random_symbol(rng, param(rng), param(rng), d, 15);
    const Symbol x = make_symbol(rx.r, rx.s, rx.top, rx.bottom);
    const Symbol y = make_symbol(ry.r, ry.s, ry.top, ry.bottom);

    const Symbol sum = add(x, y);
    EXPECT_EQ(sum.rank(), x.rank() + y.rank());
    EXPECT_EQ(sum.r(), x.r() + y.r());
    EXPECT_EQ(sum.s(), x.s() + y.s());
    EXPECT_EQ(sum, add(y, x));
    EXPECT_EQ(add(shift(x), shift(y)), sum);
    if (x.m() == y.m()) {
      EXPECT_EQ(add_aligned(shift(x), shift(y)), shift(add_aligned(x, y)));
    }

    const auto rz = oracle::random_symbol(rng, param(rng), param(rng), d, 15);
    const Symbol z = make_symbol(rz.r, rz.s, rz.top, rz.bottom);
    EXPECT_EQ(add(add(x, y), z), add(x, add(y, z)));
  }
}

}  // namespace
