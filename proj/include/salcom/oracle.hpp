#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "salcom/arrangement.hpp"
#include "salcom/bitset.hpp"
#include "salcom/errors.hpp"
#include "salcom/poset.hpp"
#include "salcom/rational.hpp"

namespace salcom {

/// A nonempty intersection of hyperplanes, identified by the set of all
/// hyperplanes containing it. Rank is its codimension.
struct Flat {
  Bitset closure;
  std::size_t rank = 0;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    closure.for_each([&](std::size_t e) {
      s += (first ? "" : ",") + std::to_string(e);
      first = false;
    });
    return s + "}";
  }
};

/// Flats ordered by reverse inclusion; flats[0] is the whole space.
struct IntersectionPoset {
  std::vector<Flat> flats;
  FinitePoset<std::size_t> order;
  std::vector<long long> mobius;  // μ(V, x) per flat
};

namespace detail {

inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    auto piv = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                            [&](const auto& row) { return row[c] != 0; });
    if (piv == m.end()) continue;
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), piv);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational k = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

class FlatAlgebra {
public:
  explicit FlatAlgebra(const Arrangement& a) : a_(a) {}

  // (rank of the normals, rank of the augmented system)
  std::pair<std::size_t, std::size_t> ranks(const Bitset& members) const {
    std::vector<std::vector<Rational>> normals, augmented;
    members.for_each([&](std::size_t e) {
      const auto& h = a_.hyperplane(e);
      normals.push_back(h.a);
      augmented.push_back(h.a);
      augmented.back().push_back(h.b);
    });
    return {rational_rank(normals), rational_rank(std::move(augmented))};
  }

  bool consistent(const Bitset& members) const {
    auto [r, ra] = ranks(members);
    return r == ra;
  }

  // All hyperplanes containing the (nonempty) flat cut out by `members`.
  Bitset closure(const Bitset& members) const {
    const std::size_t base = ranks(members).second;
    Bitset cl = members;
    for (std::size_t h = 0; h < a_.size(); ++h) {
      if (cl.test(h)) continue;
      Bitset with = members;
      with.set(h);
      if (ranks(with).second == base) cl.set(h);
    }
    return cl;
  }

private:
  const Arrangement& a_;
};

}  // namespace detail

/// Closes {V} under intersection with each hyperplane, discarding empty
/// intersections. Only defined for K = V.
inline IntersectionPoset intersection_poset(const Arrangement& a) {
  if (!a.is_full_space()) throw UsageError("intersection_poset: the oracle applies only when K is the whole space");
  const detail::FlatAlgebra alg(a);
  const std::size_t n = a.size();

  std::vector<Flat> flats{{Bitset(n), 0}};
  std::set<std::vector<std::size_t>> seen{{}};
  for (std::size_t q = 0; q < flats.size(); ++q) {
    const Flat current = flats[q];
    for (std::size_t h = 0; h < n; ++h) {
      if (current.closure.test(h)) continue;
      Bitset with = current.closure;
      with.set(h);
      if (!alg.consistent(with)) continue;
      Bitset cl = alg.closure(with);
      if (!seen.insert(cl.indices()).second) continue;
      flats.push_back({cl, alg.ranks(cl).first});
    }
  }
  std::stable_sort(flats.begin() + 1, flats.end(), [](const Flat& x, const Flat& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.closure.indices() < y.closure.indices();
  });

  IntersectionPoset p;
  p.flats = std::move(flats);
  std::vector<std::size_t> ids(p.flats.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  p.order = FinitePoset<std::size_t>::from_relation(ids, [&](std::size_t i, std::size_t j) {
    return p.flats[i].closure.is_subset_of(p.flats[j].closure);
  });
  p.mobius.assign(p.flats.size(), 0);
  for (std::size_t j = 0; j < p.flats.size(); ++j) {
    if (j == 0) {
      p.mobius[j] = 1;
      continue;
    }
    long long sum = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (p.order.less(i, j)) sum += p.mobius[i];
    p.mobius[j] = -sum;
  }
  return p;
}

/// Coefficients of Σ_x |μ(V,x)| t^rank(x), lowest degree first.
inline std::vector<long long> poincare_polynomial(const IntersectionPoset& p) {
  std::vector<long long> coeffs;
  for (std::size_t i = 0; i < p.flats.size(); ++i) {
    const std::size_t r = p.flats[i].rank;
    if (coeffs.size() <= r) coeffs.resize(r + 1, 0);
    coeffs[r] += p.mobius[i] < 0 ? -p.mobius[i] : p.mobius[i];
  }
  return coeffs;
}

inline long long region_count(const IntersectionPoset& p) {
  long long total = 0;
  for (long long c : poincare_polynomial(p)) total += c;
  return total;
}

}  // namespace salcom
