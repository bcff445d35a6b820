#include <gtest/gtest.h>

#include "support.hpp"

using namespace salcom;
using test::form;

namespace {

Region region(std::size_t d, std::vector<std::pair<AffineForm, Relation>> cs) {
  Region r(d);
  for (auto& [f, rel] : cs) r.add({f, rel});
  return r;
}

// Brute force for d <= 2: the region, intersected with a large box, is a
// polytope whose vertices lie on pairs of boundary lines; if nonempty, the
// centroid of some 1-3 of those vertices lies in it.
bool brute_feasible(const Region& r) {
  const std::size_t d = r.dim();
  const long long box = 1000;
  std::vector<AffineForm> lines;
  for (const auto& c : r.constraints()) lines.push_back(c.form);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<long long> a(d, 0);
    a[i] = 1;
    lines.push_back(form(a, box));
    lines.push_back(form(a, -box));
  }
  std::vector<Point> vertices;
  if (d == 1) {
    for (const auto& l : lines)
      if (l.a[0] != 0) vertices.push_back({-l.b / l.a[0]});
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const auto &p = lines[i], &q = lines[j];
        const Rational det = p.a[0] * q.a[1] - p.a[1] * q.a[0];
        if (det == 0) continue;
        vertices.push_back({(-p.b * q.a[1] + q.b * p.a[1]) / det, (-p.a[0] * q.b + q.a[0] * p.b) / det});
      }
  }
  auto test_point = [&](const Point& v) { return r.contains(v); };
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i; j < vertices.size(); ++j)
      for (std::size_t k = j; k < vertices.size(); ++k) {
        Point c(d);
        for (std::size_t x = 0; x < d; ++x) c[x] = (vertices[i][x] + vertices[j][x] + vertices[k][x]) / 3;
        if (test_point(c)) return true;
        if (k == j) {
          Point m(d);
          for (std::size_t x = 0; x < d; ++x) m[x] = (vertices[i][x] + vertices[j][x]) / 2;
          if (test_point(m)) return true;
        }
      }
  return false;
}

}  // namespace

TEST(Region, ContradictoryRays) {
  const auto r = region(1, {{form({1}, 0), Relation::positive}, {form({-1}, -1), Relation::positive}});
  EXPECT_FALSE(feasible(r).feasible);
}

TEST(Region, ForcedPoint) {
  const auto f = feasible(region(1, {{form({1}, 1), Relation::zero}}));
  ASSERT_TRUE(f.feasible);
  EXPECT_EQ(f.witness, Point{Rational(-1)});
}

TEST(Region, MidpointOfInterval) {
  const auto f = feasible(region(1, {{form({1}, 1), Relation::positive}, {form({-1}, 1), Relation::positive}}));
  ASSERT_TRUE(f.feasible);
  EXPECT_EQ(f.witness, Point{Rational(0)});
}

TEST(Region, EmptyRegionIsWholeSpace) {
  const auto f = feasible(Region(3));
  ASSERT_TRUE(f.feasible);
  EXPECT_EQ(f.witness->size(), 3u);
}

TEST(Region, StrictnessMatters) {
  // x > 0, -x >= ... only via equality: x = 0 and x > 0 is empty.
  EXPECT_FALSE(feasible(region(1, {{form({1}, 0), Relation::positive}, {form({1}, 0), Relation::zero}})).feasible);
  // x > 0 and 1 - x > 0 in the plane with y = 2x.
  const auto f = feasible(region(2, {{form({1, 0}, 0), Relation::positive},
                                     {form({-1, 0}, 1), Relation::positive},
                                     {form({2, -1}, 0), Relation::zero}}));
  ASSERT_TRUE(f.feasible);
  EXPECT_EQ((*f.witness)[1], 2 * (*f.witness)[0]);
}

TEST(Region, Subset) {
  const auto pos = region(1, {{form({1}, 0), Relation::positive}});
  const auto gt_minus_one = region(1, {{form({1}, 1), Relation::positive}});
  EXPECT_TRUE(region_subset(pos, gt_minus_one));
  EXPECT_FALSE(region_subset(gt_minus_one, pos));
  EXPECT_TRUE(region_equal(pos, pos));
  Region empty = pos;
  empty.add_positive(form({-1}, 0));
  EXPECT_TRUE(region_subset(empty, gt_minus_one));
}

TEST(Region, ImpliesEquality) {
  const auto line = region(2, {{form({1, -1}, 0), Relation::zero}});
  EXPECT_TRUE(implies(line, {form({-1, 1}, 0), Relation::zero}));
  EXPECT_FALSE(implies(line, {form({1, 0}, 0), Relation::zero}));
}

TEST(Region, DimensionMismatchThrows) {
  Region r(2);
  EXPECT_THROW(r.add_positive(form({1}, 0)), UsageError);
}

TEST(RegionProperties, FourierMotzkinMatchesBruteForce) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  std::size_t feasible_count = 0, total = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t d = trial % 2 + 1;
    Region r(d);
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < k; ++i) {
      std::vector<long long> a(d);
      for (auto& x : a) x = coeff(rng);
      const bool eq = std::uniform_int_distribution<int>(0, 5)(rng) == 0;
      r.add({form(a, coeff(rng)), eq ? Relation::zero : Relation::positive});
    }
    const auto f = feasible(r);
    ASSERT_EQ(f.feasible, brute_feasible(r)) << "trial " << trial;
    if (f.feasible) {
      ASSERT_TRUE(r.contains(*f.witness));
      ++feasible_count;
    }
    ++total;
  }
  EXPECT_GT(feasible_count, total / 5);
  EXPECT_LT(feasible_count, total);
}

TEST(RegionProperties, SubsetMatchesSampling) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long long> coeff(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Region a(1), b(1);
    for (int i = 0; i < 2; ++i) {
      a.add_positive(form({coeff(rng)}, coeff(rng)));
      b.add_positive(form({coeff(rng)}, coeff(rng)));
    }
    bool counterexample = false;
    for (int num = -400; num <= 400; ++num) {
      const Point v{Rational(num, 64)};
      if (a.contains(v) && !b.contains(v)) counterexample = true;
    }
    // Every breakpoint of these forms is a multiple of 1/2 within [-2, 2], so
    // a 1/64 grid over [-6.25, 6.25] finds a counterexample whenever one exists.
    ASSERT_EQ(region_subset(a, b), !counterexample) << "trial " << trial;
  }
}
