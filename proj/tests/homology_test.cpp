#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace salcom;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}); }
SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Six-vertex triangulation of the real projective plane: H_1 = Z/2.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

BigInt det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const BigInt term = m[0][j] * det(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
             std::vector<std::size_t> cur = {}, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
// s_k = d_k / d_{k-1}.
std::vector<BigInt> factors_by_minors(const IntegerMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows(), k, rs);
    subsets(m.cols(), k, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        BigInt d = det(sub);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST(Boundary, SingleEdge) {
  const auto c = boundary_matrices(SimplicialComplex::from_facets(2, {{0, 1}}));
  ASSERT_EQ(c.boundary.size(), 2u);
  const auto d1 = c.boundary[1].to_dense();
  ASSERT_EQ(d1.rows(), 2u);
  ASSERT_EQ(d1.cols(), 1u);
  EXPECT_EQ(d1(0, 0), -1);
  EXPECT_EQ(d1(1, 0), 1);
}

TEST(Boundary, HollowTriangleRankTwo) {
  const auto c = boundary_matrices(hollow_triangle());
  EXPECT_EQ(smith_normal_form(c.boundary[1]).rank, 2u);
}

TEST(Boundary, Point) {
  const auto c = boundary_matrices(SimplicialComplex::from_facets(1, {{0}}));
  EXPECT_EQ(c.boundary.size(), 1u);
  EXPECT_EQ(c.boundary[0].nonzeros(), 0u);
}

TEST(Boundary, SquaresToZero) {
  for (const auto& k : {projective_plane(), tetrahedron_boundary(), order_complex(salvetti_poset(
                                                                        enumerate_covectors(test::generic_lines()).com))}) {
    const auto c = boundary_matrices(k);
    for (std::size_t d = 2; d < c.boundary.size(); ++d) {
      const auto a = c.boundary[d - 1].to_dense(), b = c.boundary[d].to_dense();
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
          BigInt s = 0;
          for (std::size_t t = 0; t < a.cols(); ++t) s += a(i, t) * b(t, j);
          ASSERT_EQ(s, 0);
        }
    }
  }
}

TEST(Smith, KnownForms) {
  const auto s = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.factors, (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).factors, (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix(3, 2)).rank, 0u);
}

TEST(SmithProperties, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    IntegerMatrix m(dim(rng), dim(rng));
    const bool sparse = trial % 3 == 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sparse && entry(rng) % 2 ? 0 : entry(rng);
    const auto expected = factors_by_minors(m);
    const auto got = smith_normal_form(m);
    ASSERT_EQ(got.factors, expected) << "trial " << trial;
    ASSERT_EQ(got.rank, expected.size());

    SparseMatrix s{static_cast<std::uint32_t>(m.rows()), static_cast<std::uint32_t>(m.cols()), {}};
    s.columns.resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, j) != 0) s.columns[j].push_back({static_cast<std::uint32_t>(i), static_cast<long long>(m(i, j))});
    ASSERT_EQ(smith_normal_form(s).factors, expected) << "sparse trial " << trial;
  }
}

TEST(SmithProperties, OverflowFallsBackToBigIntegers) {
  const long long big = 3037000499LL;  // about sqrt(2^63)
  SparseMatrix s{2, 2, {{{0, big}, {1, 1}}, {{0, big}, {1, big}}}};
  const auto expected = factors_by_minors(s.to_dense());
  EXPECT_EQ(smith_normal_form(s).factors, expected);
}

TEST(Homology, StandardSpaces) {
  EXPECT_EQ(betti(hollow_triangle()).betti, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(betti(tetrahedron_boundary()).betti, (std::vector<std::size_t>{1, 0, 1}));
  const auto rp2 = betti(projective_plane());
  EXPECT_EQ(rp2.betti, (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_FALSE(rp2.torsion_free());
  EXPECT_EQ(rp2.torsion[1], (std::vector<BigInt>{2}));
  const auto two_points = SimplicialComplex::from_facets(2, {{0}, {1}});
  EXPECT_EQ(betti(two_points).reduced_betti, (std::vector<std::size_t>{1}));
}

TEST(Homology, EulerCharacteristicMatchesBetti) {
  for (const auto& k : {hollow_triangle(), tetrahedron_boundary(), projective_plane()}) {
    const auto h = betti(k);
    long long chi = 0;
    for (std::size_t i = 0; i < h.betti.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(h.betti[i]);
    EXPECT_EQ(chi, k.euler_characteristic());
  }
}

TEST(Homology, InvariantUnderVertexRelabelling) {
  const auto base = projective_plane();
  std::vector<std::uint32_t> perm{3, 5, 0, 1, 4, 2};
  std::vector<Simplex> facets;
  for (const auto& f : base.simplices(2)) {
    Simplex g;
    for (auto v : f) g.push_back(perm[v]);
    facets.push_back(g);
  }
  const auto relabelled = betti(SimplicialComplex::from_facets(6, facets));
  const auto original = betti(base);
  EXPECT_EQ(relabelled.betti, original.betti);
  EXPECT_EQ(relabelled.torsion, original.torsion);
}

TEST(Acyclicity, Cones) {
  const auto cone = SimplicialComplex::from_facets(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
  EXPECT_TRUE(is_reduced_acyclic(cone));
  EXPECT_TRUE(try_collapse(cone));
  EXPECT_FALSE(is_reduced_acyclic(SimplicialComplex::from_facets(2, {{0}, {1}})));
  EXPECT_FALSE(is_reduced_acyclic(tetrahedron_boundary()));
  EXPECT_FALSE(try_collapse(hollow_triangle()));
}

TEST(Acyclicity, FacePosetOfTwoPointLine) {
  const auto c = order_complex(face_poset(enumerate_covectors(test::two_points()).com));
  EXPECT_TRUE(is_reduced_acyclic(c));
  EXPECT_TRUE(try_collapse(c));
}
