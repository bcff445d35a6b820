#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "salcom/bitset.hpp"
#include "salcom/errors.hpp"

namespace salcom {

/// Finite poset over an indexed list of labels.
///
/// The relation is stored as per-element up-sets and down-sets (reflexive).
/// Construction validates reflexivity, antisymmetry and transitivity.
template <class Label>
class FinitePoset {
public:
  FinitePoset() = default;

  template <class Leq>
  static FinitePoset from_relation(std::vector<Label> labels, Leq&& leq) {
    const std::size_t n = labels.size();
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.up_.assign(n, Bitset(n));
    p.down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(p.labels_[i], p.labels_[j])) {
          p.up_[i].set(j);
          p.down_[j].set(i);
        }
    p.validate();
    return p;
  }

  // Builds from an explicit up-set matrix (row i holds every j with i <= j).
  static FinitePoset from_up_sets(std::vector<Label> labels, std::vector<Bitset> up) {
    const std::size_t n = labels.size();
    if (up.size() != n) throw UsageError("poset: relation size does not match label count");
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (p.up_[i].size() != n) throw UsageError("poset: ragged relation row");
      p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
    }
    p.validate();
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  const Label& label(std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && up_[i].test(j); }
  const Bitset& up_set(std::size_t i) const { return up_[i]; }
  const Bitset& down_set(std::size_t i) const { return down_[i]; }

  Bitset strict_up(std::size_t i) const {
    Bitset b = up_[i];
    b.reset(i);
    return b;
  }

  /// Covering relations (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < size(); ++i) {
      const Bitset above = strict_up(i);
      above.for_each([&](std::size_t j) {
        Bitset between = above & down_[j];
        between.reset(j);
        if (between.none()) edges.emplace_back(i, j);
      });
    }
    return edges;
  }

  std::vector<std::size_t> maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (up_[i].count() == 1) out.push_back(i);
    return out;
  }

  FinitePoset opposite() const {
    FinitePoset p;
    p.labels_ = labels_;
    p.up_ = down_;
    p.down_ = up_;
    return p;
  }

  /// Induced subposet on the given element indices, in the given order.
  FinitePoset induced(const std::vector<std::size_t>& members) const {
    const std::size_t m = members.size();
    std::vector<Label> labels;
    labels.reserve(m);
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a) {
      labels.push_back(labels_[members[a]]);
      for (std::size_t b = 0; b < m; ++b)
        if (leq(members[a], members[b])) up[a].set(b);
    }
    return from_up_sets(std::move(labels), std::move(up));
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

private:
  void validate() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!up_[i].test(i)) throw UsageError("poset: relation is not reflexive at element " + std::to_string(i));
      Bitset both = up_[i] & down_[i];
      both.reset(i);
      if (both.any())
        throw UsageError("poset: relation is not antisymmetric at elements " + std::to_string(i) + " and " +
                         std::to_string(both.first()));
      up_[i].for_each([&](std::size_t j) {
        if (!up_[j].is_subset_of(up_[i]))
          throw UsageError("poset: relation is not transitive through elements " + std::to_string(i) + " <= " +
                           std::to_string(j));
      });
    }
  }

  std::vector<Label> labels_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

/// True iff `map` (element i of p goes to element map[i] of q) is an order
/// isomorphism. Throws UsageError when `map` is not a bijection.
template <class L1, class L2>
bool verify_order_iso(const std::vector<std::size_t>& map, const FinitePoset<L1>& p, const FinitePoset<L2>& q) {
  if (map.size() != p.size() || p.size() != q.size())
    throw UsageError("verify_order_iso: map is not a bijection (sizes " + std::to_string(map.size()) + ", " +
                     std::to_string(p.size()) + ", " + std::to_string(q.size()) + ")");
  std::vector<bool> hit(q.size(), false);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= q.size() || hit[map[i]])
      throw UsageError("verify_order_iso: map is not a bijection at element " + std::to_string(i));
    hit[map[i]] = true;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j) != q.leq(map[i], map[j])) return false;
  return true;
}

template <class Label, class ToString>
std::string hasse_dot(const FinitePoset<Label>& p, ToString&& name, const std::string& graph_name = "hasse") {
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) out += "  \"" + name(p.label(i)) + "\";\n";
  for (auto [i, j] : p.hasse()) out += "  \"" + name(p.label(i)) + "\" -> \"" + name(p.label(j)) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace salcom
