#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "salcom/arrangement.hpp"
#include "salcom/com.hpp"
#include "salcom/homology.hpp"
#include "salcom/oracle.hpp"
#include "salcom/salvetti.hpp"
#include "salcom/simplicial.hpp"
#include "salcom/zcover.hpp"

namespace salcom {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct InstanceReport {
  std::size_t dim = 0, hyperplanes = 0, region_constraints = 0;
  std::size_t covectors = 0, topes = 0, salvetti_elements = 0;
  HomologyProfile salvetti_homology;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

template <class T>
std::vector<T> trim_trailing_zeros(std::vector<T> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

/// Betti numbers of |Sal| next to the Poincaré coefficients, as integers.
struct OrlikSolomonComparison {
  std::vector<long long> salvetti;
  std::vector<long long> poincare;
  bool torsion_free = true;
  bool agree() const { return torsion_free && trim_trailing_zeros(salvetti) == trim_trailing_zeros(poincare); }
};

inline OrlikSolomonComparison compare_orlik_solomon(const Arrangement& a, const HomologyProfile& h) {
  OrlikSolomonComparison c;
  for (auto b : h.betti) c.salvetti.push_back(static_cast<long long>(b));
  c.poincare = poincare_polynomial(intersection_poset(a));
  c.torsion_free = h.torsion_free();
  return c;
}

/// Runs the full battery on one arrangement.
inline InstanceReport verify_instance(const Arrangement& a) {
  InstanceReport r;
  r.dim = a.dim();
  r.hyperplanes = a.size();
  r.region_constraints = a.region().constraints().size();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const Realization real = enumerate_covectors(a);
  const Com& l = real.com;
  r.covectors = l.size();

  const auto axioms = check_com(l);
  add("com-axioms", axioms.ok(), axioms.describe());

  bool witnesses_ok = true;
  std::string bad_witness;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (a.sign_of(real.witnesses[i]) != l[i] || !a.region().contains(real.witnesses[i])) {
      witnesses_ok = false;
      bad_witness = l[i].to_string();
      break;
    }
  add("witnesses", witnesses_ok, bad_witness);

  if (a.size() <= 6) {
    const auto scan = enumerate_covectors_exhaustive(a);
    add("enumeration-oracle", scan.com == l,
        std::to_string(l.size()) + " pruned vs " + std::to_string(scan.com.size()) + " exhaustive");
  }

  if (!axioms.ok()) return r;

  const auto faces = face_poset(l);
  const auto ts = topes(l);
  r.topes = ts.size();
  {
    auto maxima = faces.maximal_elements();
    std::vector<SignVector> max_labels;
    for (auto i : maxima) max_labels.push_back(faces.label(i));
    add("topes-maximal", max_labels == ts);
  }

  const auto face_complex = order_complex(faces);
  add("face-poset-acyclic", is_reduced_acyclic(face_complex),
      try_collapse(face_complex) ? "collapsible" : "collapse inconclusive");

  const auto sal = salvetti_poset(l);
  r.salvetti_elements = sal.size();
  const auto sal_complex = order_complex(sal);
  r.salvetti_homology = betti(sal_complex);
  add("salvetti-torsion-free", r.salvetti_homology.torsion_free());

  add("opposite-invariance", order_complex(sal.opposite()) == sal_complex);

  {
    const auto ss = semisimplify(l);
    const auto ss_betti = betti(salvetti_complex(ss.com));
    const bool iso = verify_order_iso(ss.covector_image, faces, face_poset(ss.com));
    add("semisimplify-invariance", iso && ss_betti.betti == r.salvetti_homology.betti,
        "betti " + join(r.salvetti_homology.betti) + " vs " + join(ss_betti.betti) + (iso ? "" : "; not an order iso"));
  }

  if (a.is_full_space()) {
    const auto os = compare_orlik_solomon(a, r.salvetti_homology);
    add("orlik-solomon", os.agree(), "salvetti " + join(os.salvetti) + " vs poincare " + join(os.poincare));
    const long long regions = region_count(intersection_poset(a));
    add("zaslavsky", regions == static_cast<long long>(ts.size()),
        std::to_string(ts.size()) + " topes vs " + std::to_string(regions) + " regions");
  }

  try {
    const CoverModel model(a);
    const auto nerve = model.verify_nerve();
    std::string detail = std::to_string(nerve.representatives) + " representatives, " +
                         std::to_string(nerve.cover_pairs) + " cover pairs";
    if (!nerve.ok()) detail += "; first failure: " + nerve.failures.front();
    add("nerve", nerve.ok(), detail);
  } catch (const std::exception& e) {
    add("nerve", false, e.what());
  }
  return r;
}

inline std::string summarize(std::size_t index, const InstanceReport& r) {
  std::ostringstream os;
  os << "instance " << index << ": d=" << r.dim << " |E|=" << r.hyperplanes << " |K|=" << r.region_constraints
     << " |L|=" << r.covectors << " topes=" << r.topes << " |Sal|=" << r.salvetti_elements
     << " betti=" << join(r.salvetti_homology.betti) << (r.passed() ? " PASS" : " FAIL");
  return os.str();
}

}  // namespace salcom
