#include <gtest/gtest.h>

#include "hypereuler/hyperharmonic.hpp"

using namespace hypereuler;

TEST(GenHarmonic, Examples) {
  EXPECT_EQ(gen_harmonic(1, 3), make_rational(11, 6));
  EXPECT_EQ(gen_harmonic(2, 2), make_rational(5, 4));
  EXPECT_EQ(gen_harmonic(-2, 3), 14);
  EXPECT_EQ(gen_harmonic(0, 9), 9);
  EXPECT_EQ(gen_harmonic(3, 0), 0);
}

TEST(HDef, Examples) {
  EXPECT_EQ(h_def(1, 1, 3), make_rational(11, 6));
  EXPECT_EQ(h_def(2, 2, 2), make_rational(9, 4));
  EXPECT_EQ(h_def(3, 2, 1), 1);
  EXPECT_THROW(h_def(1, 1000, 1000), ResourceGuardError);
  EXPECT_THROW(h_def(0, 1, 3), DomainError);
}

TEST(HClosed, Examples) {
  EXPECT_EQ(h_closed(2, 2, 2), make_rational(9, 4));
  EXPECT_EQ(h_closed(1, 1, 5), make_rational(137, 60));
  EXPECT_EQ(h_closed(1, 3, 2), make_rational(7, 2));
  EXPECT_EQ(h_def(1, 3, 2), make_rational(7, 2));
}

TEST(HClosed, MatchesDefinition) {
  for (long p = 1; p <= 4; ++p)
    for (int r = 1; r <= 5; ++r)
      for (long n = 0; n <= 50; ++n) ASSERT_EQ(h_closed(p, r, n), h_def(p, r, n)) << p << " " << r << " " << n;
}

TEST(ConwayGuy, Examples) {
  EXPECT_EQ(conway_guy(1, 3), make_rational(11, 6));
  EXPECT_EQ(conway_guy(2, 2), make_rational(5, 2));
  EXPECT_EQ(conway_guy(3, 2), make_rational(7, 2));
}

TEST(ConwayGuy, MatchesDefinition) {
  for (int r = 1; r <= 6; ++r)
    for (long n = 1; n <= 50; ++n) ASSERT_EQ(conway_guy(r, n), h_def(1, r, n)) << r << " " << n;
}

TEST(HDef, StrictlyIncreasing) {
  for (long p = 1; p <= 3; ++p)
    for (int r = 1; r <= 4; ++r)
      for (long n = 1; n <= 30; ++n) EXPECT_LT(h_def(p, r, n - 1), h_def(p, r, n));
}

TEST(HDef, Boundaries) {
  for (long p = 1; p <= 4; ++p)
    for (int r = 1; r <= 6; ++r) {
      EXPECT_EQ(h_def(p, r, 0), 0);
      EXPECT_EQ(h_def(p, r, 1), 1);
      EXPECT_EQ(h_closed(p, r, 0), 0);
      EXPECT_EQ(h_closed(p, r, 1), 1);
    }
}
