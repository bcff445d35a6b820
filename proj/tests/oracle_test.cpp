#include <gtest/gtest.h>

#include "support.hpp"
#include "whitney.hpp"

using namespace salcom;
using test::form;

TEST(Oracle, TwoPoints) {
  const auto p = intersection_poset(test::two_points());
  EXPECT_EQ(p.flats.size(), 3u);
  EXPECT_EQ(p.mobius, (std::vector<long long>{1, -1, -1}));
  EXPECT_EQ(poincare_polynomial(p), (std::vector<long long>{1, 2}));
  EXPECT_EQ(region_count(p), 3);
}

TEST(Oracle, GenericLines) {
  const auto p = intersection_poset(test::generic_lines());
  EXPECT_EQ(p.flats.size(), 7u);
  EXPECT_EQ(poincare_polynomial(p), (std::vector<long long>{1, 3, 3}));
  EXPECT_EQ(region_count(p), 7);
}

TEST(Oracle, ConcurrentLines) {
  const auto p = intersection_poset(test::concurrent_lines());
  EXPECT_EQ(p.flats.size(), 5u);
  EXPECT_EQ(p.mobius.back(), 2);
  EXPECT_EQ(poincare_polynomial(p), (std::vector<long long>{1, 3, 2}));
}

TEST(Oracle, EmptyArrangement) {
  const auto p = intersection_poset(Arrangement(3, {}));
  EXPECT_EQ(p.flats.size(), 1u);
  EXPECT_EQ(region_count(p), 1);
}

TEST(Oracle, ParallelAndDuplicateHyperplanes) {
  // x = 0 twice (once negated), x = 1, y = 0: flats V, {0,1}, {2}, {3}, {0,1,3}, {2,3}.
  const Arrangement a(2, {form({1, 0}, 0), form({-2, 0}, 0), form({1, 0}, -1), form({0, 1}, 0)});
  const auto p = intersection_poset(a);
  EXPECT_EQ(p.flats.size(), 6u);
  EXPECT_EQ(poincare_polynomial(p), (std::vector<long long>{1, 3, 2}));
  EXPECT_EQ(region_count(p), static_cast<long long>(topes(enumerate_covectors(a).com).size()));
}

TEST(Oracle, RejectsRestrictedRegion) {
  EXPECT_THROW(intersection_poset(test::two_points_halfline()), UsageError);
}

TEST(OracleProperties, MobiusSignsAlternate) {
  CorpusOptions opts;
  opts.seed = 4;
  opts.count = 30;
  opts.max_dim = 3;
  opts.max_hyperplanes = 5;
  opts.max_region_halfspaces = 0;
  for (const auto& a : generate_corpus(opts)) {
    const auto p = intersection_poset(a);
    for (std::size_t i = 0; i < p.flats.size(); ++i) {
      const long long signed_mu = (p.flats[i].rank % 2 ? -1 : 1) * p.mobius[i];
      ASSERT_GE(signed_mu, 0);
    }
    for (auto [i, j] : p.order.hasse()) ASSERT_LT(p.flats[i].rank, p.flats[j].rank);
  }
}

TEST(OracleProperties, MobiusAgreesWithWhitneyFormula) {
  CorpusOptions opts;
  opts.seed = 12;
  opts.count = 40;
  opts.max_dim = 3;
  opts.max_hyperplanes = 6;
  opts.max_region_halfspaces = 0;
  for (const auto& a : generate_corpus(opts)) {
    auto mobius = poincare_polynomial(intersection_poset(a));
    while (mobius.size() > 1 && mobius.back() == 0) mobius.pop_back();
    ASSERT_EQ(mobius, test::whitney_poincare(a)) << to_json(a).dump();
  }
  EXPECT_EQ(test::whitney_poincare(test::concurrent_lines()), (std::vector<long long>{1, 3, 2}));
}
