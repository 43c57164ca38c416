#include <gtest/gtest.h>

#include "hypereuler/decomposer.hpp"

using namespace hypereuler;

namespace {

EulerSumExpr terms(std::initializer_list<std::tuple<int, int, Rational>> list) {
  EulerSumExpr e;
  for (const auto& [p, q, c] : list) e.add_euler(p, q, c);
  return e;
}

}  // namespace

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(2, 1, 3), EulerSumExpr::single(2, 3));
  EXPECT_EQ(decompose(2, 2, 4), terms({{2, 4, 1}, {2, 3, 1}, {1, 4, -1}}));
  EXPECT_EQ(decompose(1, 2, 4), terms({{1, 4, 1}, {1, 3, 1}, {0, 4, -1}}));
}

TEST(Decompose, LevelOneIsPlainEulerSum) {
  for (int p = 1; p <= 6; ++p)
    for (int m = 2; m <= 8; ++m) EXPECT_EQ(decompose(p, 1, m), EulerSumExpr::single(p, m));
}

TEST(DecomposeNormalized, Examples) {
  EulerSumExpr plain = terms({{1, 4, 1}, {1, 3, 1}});
  plain.zeta().add({3}, -1);
  EXPECT_EQ(decompose_normalized(1, 2, 4), plain);

  EulerSumExpr reduced;
  reduced.zeta().add({5}, 3);
  reduced.zeta().add({2, 3}, -1);
  reduced.zeta().add({4}, make_rational(5, 2));
  reduced.zeta().add({2, 2}, make_rational(-1, 2));
  reduced.zeta().add({3}, -1);
  EXPECT_EQ(decompose_normalized(1, 2, 4, true), reduced);

  EXPECT_EQ(decompose_normalized(1, 1, 2, true).zeta(), ZetaExpr::single(3, 2));
  EXPECT_TRUE(decompose_normalized(1, 1, 2, true).euler_terms().empty());
}

TEST(Decompose, HypothesisEnforced) {
  EXPECT_THROW(decompose(1, 2, 2), HypothesisError);
  EXPECT_THROW(decompose(1, 3, 1), HypothesisError);
  try {
    decompose(1, 3, 3);
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("m >= r+1"), std::string::npos);
  }
  EXPECT_THROW(decompose(0, 1, 3), DomainError);
}

TEST(Decompose, ConvergenceSafetyGrid) {
  for (int p = 1; p <= 6; ++p)
    for (int r = 1; r <= 9; ++r)
      for (int m = r + 1; m <= r + 6; ++m) {
        const auto raw = decompose_terms(p, r, m);
        ASSERT_EQ(raw.size(), static_cast<std::size_t>(r * (r + 1) / 2));
        for (const auto& t : raw) {
          const int l = p - t.p;
          if (t.p >= 1) {
            EXPECT_GE(t.q, l + 2);
            EXPECT_GE(t.q, 2);
          } else {
            EXPECT_GE(t.q + t.p, 3);
          }
        }
        EXPECT_NO_THROW(decompose_normalized(p, r, m, true));
      }
}

TEST(DecomposeNormalized, OnlyPositiveOrdersRemain) {
  for (int p = 1; p <= 3; ++p)
    for (int r = 1; r <= 6; ++r) {
      const EulerSumExpr e = decompose_normalized(p, r, r + 1);
      for (const auto& [idx, coef] : e.euler_terms()) EXPECT_GE(idx.p, 1);
    }
}
