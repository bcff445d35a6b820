#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "salcom/com.hpp"
#include "salcom/errors.hpp"
#include "salcom/poset.hpp"
#include "salcom/simplicial.hpp"

namespace salcom {

/// A pair (X, T) with X a covector below the tope T.
struct SalElement {
  SignVector face;
  SignVector tope;

  std::string to_string() const { return "(" + face.to_string() + "," + tope.to_string() + ")"; }
  friend bool operator==(const SalElement&, const SalElement&) = default;
};

struct SalElementHash {
  std::size_t operator()(const SalElement& s) const { return s.face.hash() * 1000003u ^ s.tope.hash(); }
};

// (X,T) ⪯ (X',T')  iff  X <= X' and X'∘T = T'.
inline bool sal_leq(const SalElement& a, const SalElement& b) {
  return leq(a.face, b.face) && compose(b.face, a.tope) == b.tope;
}

using SalvettiPoset = FinitePoset<SalElement>;

/// Elements are enumerated topes-outer, covectors-inner, both in canonical order.
inline SalvettiPoset salvetti_poset(const Com& l) {
  const auto report = check_com(l);
  if (!report.ok()) throw UsageError("salvetti_poset: not a conditional oriented matroid (" + report.describe() + ")");
  std::vector<SalElement> elements;
  for (const auto& t : topes(l))
    for (const auto& x : l.covectors())
      if (leq(x, t)) elements.push_back({x, t});
  return SalvettiPoset::from_relation(std::move(elements), sal_leq);
}

inline SimplicialComplex salvetti_complex(const Com& l) { return order_complex(salvetti_poset(l)); }

/// Index of each element, for lookups by (X, T).
inline std::unordered_map<SalElement, std::size_t, SalElementHash> index_elements(const SalvettiPoset& sal) {
  std::unordered_map<SalElement, std::size_t, SalElementHash> idx;
  for (std::size_t i = 0; i < sal.size(); ++i) idx.emplace(sal.label(i), i);
  return idx;
}

}  // namespace salcom
