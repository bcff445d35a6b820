#include <gtest/gtest.h>

#include "support.hpp"

using namespace salcom;
using salcom::test::sv;

TEST(SignVector, ParseAndPrint) {
  EXPECT_EQ(sv("+0-").to_string(), "+0-");
  EXPECT_EQ(sv("").size(), 0u);
  EXPECT_THROW(sv("+x"), UsageError);
}

TEST(SignVector, Compose) {
  EXPECT_EQ(compose(sv("0-"), sv("++")), sv("+-"));
  EXPECT_EQ(compose(sv("--"), sv("0+")), sv("--"));
  EXPECT_EQ(compose(sv("+0-"), sv("+0-")), sv("+0-"));
  EXPECT_THROW(compose(sv("+"), sv("++")), UsageError);
}

TEST(SignVector, Negate) {
  EXPECT_EQ(negate(sv("+0-")), sv("-0+"));
  EXPECT_EQ(negate(sv("00")), sv("00"));
}

TEST(SignVector, Separator) {
  EXPECT_EQ(separator(sv("--"), sv("++")).indices(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(separator(sv("+-0"), sv("+-0")).none());
  EXPECT_TRUE(separator(sv("0-"), sv("+-")).none());
}

TEST(SignVector, Order) {
  EXPECT_TRUE(leq(sv("0-"), sv("+-")));
  EXPECT_TRUE(leq(sv("+-"), sv("+-")));
  EXPECT_FALSE(leq(sv("+-"), sv("0-")));
}

TEST(SignVector, CanonicalOrderIsEntrywiseMinusZeroPlus) {
  std::vector<SignVector> xs{sv("++"), sv("0-"), sv("+0"), sv("--"), sv("+-")};
  std::sort(xs.begin(), xs.end());
  std::vector<std::string> got;
  for (const auto& x : xs) got.push_back(x.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"--", "0-", "+-", "+0", "++"}));
}

TEST(SignVector, WideVectorsCrossWordBoundaries) {
  std::string s(130, '0');
  s[0] = '+';
  s[64] = '-';
  s[129] = '+';
  const auto x = sv(s.c_str());
  EXPECT_EQ(x.to_string(), s);
  EXPECT_EQ(x.support().indices(), (std::vector<std::size_t>{0, 64, 129}));
  EXPECT_EQ(negate(negate(x)), x);
}

// Randomized algebraic laws, checked entrywise against a plain-array model.
TEST(SignVectorProperties, AgreeWithEntrywiseModel) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 70)(rng);
    const auto x = test::random_sign_vector(rng, n);
    const auto y = test::random_sign_vector(rng, n);
    const auto z = test::random_sign_vector(rng, n);

    const auto xy = compose(x, y);
    bool x_le_y = true, lex_less = false, lex_decided = false;
    for (std::size_t e = 0; e < n; ++e) {
      const int a = static_cast<int>(x[e]), b = static_cast<int>(y[e]);
      ASSERT_EQ(static_cast<int>(xy[e]), a != 0 ? a : b);
      ASSERT_EQ(static_cast<int>(negate(x)[e]), -a);
      ASSERT_EQ(separator(x, y).test(e), a * b == -1);
      if (a != 0 && a != b) x_le_y = false;
      if (!lex_decided && a != b) {
        lex_decided = true;
        lex_less = a < b;
      }
    }
    ASSERT_EQ(leq(x, y), x_le_y);
    ASSERT_EQ(x < y, lex_less);
    ASSERT_EQ(leq(x, y), compose(x, y) == y);

    ASSERT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
    ASSERT_EQ(compose(x, x), x);
    ASSERT_EQ(compose(x, compose(y, x)), compose(x, y));
    ASSERT_TRUE(leq(x, compose(x, y)));
    ASSERT_EQ(negate(compose(x, y)), compose(negate(x), negate(y)));
    ASSERT_EQ(separator(x, y), separator(y, x));
    if (x == y) ASSERT_TRUE(separator(x, y).none());
    if (x == y) ASSERT_EQ(x.hash(), y.hash());
  }
}
