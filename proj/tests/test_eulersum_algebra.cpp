#include <gtest/gtest.h>

#include "hypereuler/eulersum_algebra.hpp"

using namespace hypereuler;

namespace {

EulerSumExpr sample() {
  EulerSumExpr e;
  e.add_euler(1, 3, make_rational(2, 3));
  e.add_euler(-1, 5, 1);
  e.add_euler(0, 4, -2);
  e.zeta().add({2, 3}, make_rational(1, 7));
  e.zeta().add({5}, 3);
  return e;
}

}  // namespace

TEST(ExprCombine, Examples) {
  const EulerSumExpr e = sample();
  EXPECT_EQ(expr_combine(e, 1, EulerSumExpr{}), e);
  EXPECT_TRUE(expr_combine(e, -1, e).is_zero());
  const EulerSumExpr s = EulerSumExpr::single(1, 3);
  EXPECT_EQ(expr_combine(s, 2, EulerSumExpr::single(1, 3, make_rational(1, 2))), EulerSumExpr::single(1, 3, 2));
}

TEST(ExprCombine, CommutativeAndAssociative) {
  const EulerSumExpr a = sample();
  const EulerSumExpr b = EulerSumExpr::single(2, 4, make_rational(-5, 2));
  EulerSumExpr c = EulerSumExpr::single(1, 3, -1);
  c.zeta().add({3, 2}, 1);
  EXPECT_EQ(expr_combine(a, 1, b), expr_combine(b, 1, a));
  EXPECT_EQ(expr_combine(expr_combine(a, 1, b), 1, c), expr_combine(a, 1, expr_combine(b, 1, c)));
}

TEST(ZetaExpr, ProductsAreUnordered) {
  ZetaExpr x, y;
  x.add({2, 3}, 1);
  y.add({3, 2}, 1);
  EXPECT_EQ(x, y);
  EXPECT_EQ(to_text(x), "zeta(2)*zeta(3)");
  ZetaExpr sq;
  sq.add({2, 2}, 1);
  EXPECT_EQ(to_text(sq), "zeta(2)^2");
}

TEST(ZetaExpr, StructuralGuards) {
  ZetaExpr z;
  EXPECT_THROW(z.add({2, 2, 2}, 1), StructuralError);
  EXPECT_THROW(z.add({}, 1), StructuralError);
  EXPECT_THROW(z.add({1}, 1), DivergenceError);
  z.add({4}, 0);
  EXPECT_TRUE(z.terms().empty());
  EulerSumExpr e;
  EXPECT_THROW(e.add_euler(1, 1, 1), StructuralError);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize_nonpositive(EulerSumExpr::single(0, 4)).zeta(), ZetaExpr::single(3));
  ZetaExpr expect = ZetaExpr::single(3, make_rational(1, 2));
  expect.add({4}, make_rational(1, 2));
  const EulerSumExpr n = normalize_nonpositive(EulerSumExpr::single(-1, 5));
  EXPECT_TRUE(n.euler_terms().empty());
  EXPECT_EQ(n.zeta(), expect);
  EXPECT_EQ(normalize_nonpositive(EulerSumExpr::single(2, 3)), EulerSumExpr::single(2, 3));
}

TEST(Normalize, DivergentOrder) { EXPECT_THROW(nonpositive_euler_sum(0, 2), DivergenceError); }

TEST(Normalize, Idempotent) {
  const EulerSumExpr once = normalize_nonpositive(sample());
  EXPECT_EQ(normalize_nonpositive(once), once);
  for (const auto& [idx, coef] : once.euler_terms()) EXPECT_GE(idx.p, 1);
}

TEST(EulerReduce, Examples) {
  EXPECT_EQ(euler_reduce_s1(2), ZetaExpr::single(3, 2));
  ZetaExpr m3 = ZetaExpr::single(4, make_rational(5, 2));
  m3.add({2, 2}, make_rational(-1, 2));
  EXPECT_EQ(euler_reduce_s1(3), m3);
  ZetaExpr m4 = ZetaExpr::single(5, 3);
  m4.add({2, 3}, -1);
  EXPECT_EQ(euler_reduce_s1(4), m4);
  EXPECT_THROW(euler_reduce_s1(1), DomainError);
}

TEST(Render, TextAndLatex) {
  EulerSumExpr e = EulerSumExpr::single(2, 4);
  e.add_euler(2, 3, 1);
  e.add_euler(1, 4, -1);
  EXPECT_EQ(to_text(e), "S(2,4) + S(2,3) - S(1,4)");
  EXPECT_NE(to_latex(e).find("S^{+,+}_{2,4}"), std::string::npos);
  EXPECT_EQ(to_text(EulerSumExpr{}), "0");
  EXPECT_EQ(to_text(euler_reduce_s1(3)), "5/2*zeta(4) - 1/2*zeta(2)^2");
  EXPECT_NE(to_latex(euler_reduce_s1(3)).find("\\frac{5}{2}"), std::string::npos);
}
