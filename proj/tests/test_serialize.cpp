#include <gtest/gtest.h>

#include "hypereuler/serialize.hpp"

using namespace hypereuler;

TEST(Json, BernoulliSchema) {
  const json j = bernoulli_to_json(bernoulli_sequence(2));
  EXPECT_EQ(j.dump(), R"([{"n":0,"value":"1"},{"n":1,"value":"1/2"},{"n":2,"value":"1/6"}])");
}

TEST(Json, CoeffTableRoundTrip) {
  for (int r = 1; r <= 8; ++r) {
    const json j = to_json(a_table(r));
    EXPECT_EQ(j.at("r"), r);
    EXPECT_EQ(j.at("entries").size(), a_table(r).size());
    EXPECT_TRUE(coeff_table_from_json(json::parse(j.dump())).same_entries(a_table(r)));
  }
}

TEST(Json, ExpressionRoundTrip) {
  for (int p = 1; p <= 3; ++p)
    for (int r = 1; r <= 5; ++r)
      for (bool reduce : {false, true}) {
        const EulerSumExpr e = decompose_normalized(p, r, r + 2, reduce);
        EXPECT_EQ(euler_sum_expr_from_json(json::parse(to_json(e).dump())), e);
      }
  EXPECT_EQ(euler_sum_expr_from_json(to_json(decompose(1, 3, 4))), decompose(1, 3, 4));
}

TEST(Json, VerifySchema) {
  const json j = to_json(verify(1, 1, 2, 8));
  for (const char* key : {"p", "r", "m", "direct", "decomposed", "difference", "pass"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j.at("direct").at("value").is_string());
  EXPECT_TRUE(j.at("direct").at("bound").is_string());
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(Json, ConjectureSchema) {
  const json j = to_json(check_signs(4));
  EXPECT_EQ(j.at("conjecture"), 4);
  EXPECT_TRUE(j.at("all_pass").get<bool>());
  EXPECT_EQ(j.at("min_abs_entry").back(), "1/6");
  EXPECT_FALSE(to_json(check_symmetry(4)).contains("min_abs_entry"));
}

TEST(Latex, CoeffTableLayout) {
  const std::string tex = to_latex(a_table(2));
  EXPECT_NE(tex.find("&a(2,1,0)=-1,\\\\"), std::string::npos);
  EXPECT_NE(tex.find("&a(2,0,0)=1, \\quad a(2,0,1)=1."), std::string::npos);
  EXPECT_NE(to_latex(a_table(3)).find("\\frac{1}{2}"), std::string::npos);
}
