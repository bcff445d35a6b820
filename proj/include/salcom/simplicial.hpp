#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "salcom/errors.hpp"
#include "salcom/poset.hpp"

namespace salcom {

using Simplex = std::vector<std::uint32_t>;  // sorted vertex indices

/// Simplicial complex on vertices 0..vertex_count-1, stored as the full list
/// of simplices grouped by dimension, each group sorted lexicographically.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Downward closure of the given simplices (vertex indices need not be sorted).
  static SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<Simplex>& facets) {
    std::vector<std::set<Simplex>> by_dim;
    for (Simplex f : facets) {
      if (f.empty()) throw UsageError("simplicial complex: empty facet");
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw UsageError("simplicial complex: repeated vertex");
      if (f.back() >= vertex_count) throw UsageError("simplicial complex: vertex index out of range");
      const std::size_t k = f.size();
      if (by_dim.size() < k) by_dim.resize(k);
      // every nonempty subset
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        Simplex s;
        for (std::size_t b = 0; b < k; ++b)
          if (mask >> b & 1u) s.push_back(f[b]);
        by_dim[s.size() - 1].insert(std::move(s));
      }
    }
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    for (auto& level : by_dim) c.simplices_.emplace_back(level.begin(), level.end());
    return c;
  }

  /// Takes an already downward-closed, duplicate-free list grouped by dimension.
  static SimplicialComplex from_closed(std::size_t vertex_count, std::vector<std::vector<Simplex>> by_dim) {
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    c.simplices_ = std::move(by_dim);
    return c;
  }

  std::size_t vertex_count() const { return vertex_count_; }
  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<Simplex>& simplices(std::size_t dim) const {
    static const std::vector<Simplex> none;
    return dim < simplices_.size() ? simplices_[dim] : none;
  }
  std::size_t count(std::size_t dim) const { return simplices(dim).size(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& level : simplices_) t += level.size();
    return t;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < simplices_.size(); ++k)
      chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices_[k].size());
    return chi;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
};

/// Chains x0 < x1 < ... < xr of the poset, as simplices on its element indices.
template <class Label>
SimplicialComplex order_complex(const FinitePoset<Label>& p) {
  std::vector<std::vector<Simplex>> by_dim;
  Simplex chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    Simplex s = chain;
    std::sort(s.begin(), s.end());
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    by_dim[s.size() - 1].push_back(std::move(s));
    p.strict_up(last).for_each([&](std::size_t next) {
      chain.push_back(static_cast<std::uint32_t>(next));
      self(self, next);
      chain.pop_back();
    });
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    chain.assign(1, static_cast<std::uint32_t>(i));
    extend(extend, i);
  }
  return SimplicialComplex::from_closed(p.size(), std::move(by_dim));
}

}  // namespace salcom
