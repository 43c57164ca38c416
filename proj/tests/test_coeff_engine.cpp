#include <gtest/gtest.h>

#include "hypereuler/coeff_engine.hpp"

using namespace hypereuler;

TEST(CoeffTable, BaseLevel) {
  EXPECT_EQ(b_table(1).b(0, 0), 1);
  EXPECT_EQ(a_table(1).a(0, 0), 1);
  EXPECT_EQ(a_table(1).size(), 1u);
}

TEST(CoeffTable, BRouteSmallCases) {
  EXPECT_EQ(b_table(3).b(0, 2), make_rational(1, 2));
  EXPECT_EQ(b_table(3).b(0, 2), a_table(3).a(2, 0));
  EXPECT_EQ(b_table(2).b(0, 1), -1);
}

TEST(CoeffTable, ARouteSmallCases) {
  EXPECT_EQ(a_table(4).a(1, 2), make_rational(-1, 2));
  EXPECT_EQ(a_table(5).a(2, 1), make_rational(5, 4));
  EXPECT_EQ(a_table(5).a(4, 0), make_rational(1, 24));
}

TEST(CoeffTable, RoutesAgreeThrough12) {
  for (int r = 1; r <= 12; ++r) {
    const CoeffTable& a = a_table(r);
    const CoeffTable& b = b_table(r);
    for (int m = 0; m < r; ++m)
      for (int j = 0; j <= r - 1 - m; ++j) ASSERT_EQ(a.a(m, j), b.b(j, m)) << r << "," << m << "," << j;
    EXPECT_TRUE(a.same_entries(b));
  }
}

TEST(CoeffTable, TriangleShape) {
  for (int r = 1; r <= 12; ++r) {
    const CoeffTable& t = a_table(r);
    EXPECT_EQ(t.size(), static_cast<std::size_t>(r * (r + 1) / 2));
    for (int m = 0; m < r; ++m) {
      EXPECT_EQ(t.row(m).size(), static_cast<std::size_t>(r - m));
      EXPECT_FALSE(t.contains(m, r - m));
      EXPECT_THROW(t.a(m, r - m), std::out_of_range);
      EXPECT_LE(t_degree(t, m), r - 1 - m);
    }
    EXPECT_THROW(t.a(r, 0), std::out_of_range);
    EXPECT_THROW(t.a(-1, 0), std::out_of_range);
  }
}

TEST(EvalT, Examples) {
  EXPECT_EQ(eval_T(1, 7, 3), 1);
  EXPECT_EQ(eval_T(2, 5, 2), 4);
  EXPECT_EQ(eval_T(3, 4, 2), 6);
}

TEST(TOracle, Examples) {
  EXPECT_EQ(t_oracle(2, 5, 2), 4);
  EXPECT_EQ(t_oracle(3, 4, 2), 6);
  EXPECT_EQ(t_oracle(4, 4, 4), 1);
  EXPECT_THROW(t_oracle(20, 20, 1), ResourceGuardError);
  EXPECT_THROW(t_oracle(0, 3, 1), DomainError);
}

TEST(TOracle, ChainCountClosedForm) {
  for (int r = 1; r <= 6; ++r)
    for (long n = 1; n <= 12; ++n)
      for (long t = 1; t <= n; ++t) ASSERT_EQ(t_oracle(r, n, t), binomial(n - t + r - 1, r - 1));
}

TEST(EvalT, MatchesOracle) {
  for (int r = 1; r <= 6; ++r)
    for (long n = 1; n <= 12; ++n)
      for (long t = 1; t <= n; ++t) ASSERT_EQ(eval_T(r, n, t), Rational(t_oracle(r, n, t))) << r << " " << n << " " << t;
}

TEST(CoeffTable, CoeffTableByRoute) {
  EXPECT_EQ(&coeff_table(4, Route::a_recurrence), &a_table(4));
  EXPECT_EQ(&coeff_table(4, Route::b_recurrence), &b_table(4));
  EXPECT_THROW(a_table(0), DomainError);
}
