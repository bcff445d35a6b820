#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "salcom/arrangement.hpp"
#include "salcom/com.hpp"
#include "salcom/errors.hpp"
#include "salcom/homology.hpp"
#include "salcom/region.hpp"
#include "salcom/salvetti.hpp"

namespace salcom {

/// A point of Z(A,K), represented by (v, S) with v in K. `face` is the
/// covector Y of the face containing v and `tope` is stored normalized as
/// Y∘S, so face <= tope. `position` is the sign of every f_e evaluated at v.
struct ZPoint {
  SignVector face;
  SignVector tope;
  Point v;
  SignVector position;
  bool in_k = true;

  std::string to_string() const { return "z=(" + face.to_string() + "," + tope.to_string() + ")"; }
};

/// The four characterizations of z ∈ U_{X,T}, evaluated independently.
struct CoverConditions {
  bool signs = false;        // T = X∘Y and S = Y∘X
  bool containment = false;  // T = X∘Y and F_X ∩ K ⊆ K_z, decided by exact feasibility
  bool sides = false;        // side agreement, read off witness points
  bool membership = false;   // v ∈ K_{X,T} and (v,S) ~ (v,T), read off v

  bool agree() const { return signs == containment && signs == sides && signs == membership; }
  std::string to_string() const {
    auto b = [](bool x) { return x ? '1' : '0'; };
    return std::string{b(signs), b(containment), b(sides), b(membership)};
  }
};

struct LocalPoset {
  std::vector<std::size_t> members;  // indices into the Salvetti poset, ascending
  SalvettiPoset poset;               // induced on `members`, same order
};

struct NerveReport {
  std::size_t representatives = 0;
  std::size_t cover_pairs = 0;
  std::size_t containment_pairs = 0;
  std::size_t kz_pairs = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Combinatorial model of Z(A,K) and its canonical cover {U_{X,T}}.
///
/// Everything depends on z only through (Y, Y∘S), so one representative per
/// Salvetti element, placed at the enumerator's witness for Y, covers every
/// distinct local poset Sal(A,K)_z.
class CoverModel {
public:
  explicit CoverModel(Arrangement a)
      : arrangement_(std::move(a)),
        realization_(enumerate_covectors(arrangement_)),
        topes_(salcom::topes(realization_.com)),
        sal_(salvetti_poset(realization_.com)),
        sal_index_(index_elements(sal_)) {
    const std::size_t n = arrangement_.size();
    halfspace_cache_.assign(realization_.com.size() * n * 2, -1);
    k_cache_.assign(realization_.com.size() * arrangement_.region().constraints().size(), -1);
  }

  const Arrangement& arrangement() const { return arrangement_; }
  const Realization& realization() const { return realization_; }
  const Com& com() const { return realization_.com; }
  const std::vector<SignVector>& topes() const { return topes_; }
  const SalvettiPoset& sal() const { return sal_; }

  std::optional<std::size_t> sal_index(const SalElement& s) const {
    auto it = sal_index_.find(s);
    if (it == sal_index_.end()) return std::nullopt;
    return it->second;
  }

  /// z represented by (v, t) for a point v of K and any tope t.
  ZPoint zpoint(Point v, const SignVector& t) const {
    const SignVector y = arrangement_.sign_of(v);
    if (!realization_.com.contains(y)) throw UsageError("z-point: v = " + salcom::to_string(v) + " is not in K");
    return make_zpoint(y, std::move(v), t);
  }

  /// z over the enumerator's witness point for covector y. The face label is
  /// y itself; `position` is recomputed from the point.
  ZPoint zpoint_at(const SignVector& y, const SignVector& t) const {
    return make_zpoint(y, realization_.witness(y), t);
  }

  /// One z per Salvetti element (Y, S), in Salvetti order.
  std::vector<ZPoint> representatives() const {
    std::vector<ZPoint> out;
    out.reserve(sal_.size());
    for (const auto& s : sal_.labels()) out.push_back(zpoint_at(s.face, s.tope));
    return out;
  }

  std::vector<SignVector> fiber(const SignVector& y) const {
    if (!realization_.com.contains(y)) throw UsageError("fiber: \"" + y.to_string() + "\" is not a covector");
    std::vector<SignVector> out;
    for (const auto& t : topes_)
      if (leq(y, t)) out.push_back(t);
    return out;
  }

  Region local_region(const ZPoint& z) const { return subregion(arrangement_, z.face, z.tope); }

  /// (v,S1) ~ (v,S2) iff no hyperplane through v separates S1 and S2; the
  /// answer is cross-checked against equality of K_{Y,S1} and K_{Y,S2}.
  bool z_equiv(const ZPoint& a, const ZPoint& b) const {
    if (a.v != b.v) throw UsageError("z_equiv: z-points over different base points");
    const bool by_sep = !separator(a.tope, b.tope).intersects(a.face.zeros());
    const bool by_region = region_equal(local_region(a), local_region(b));
    if (by_sep != by_region)
      throw InvariantViolation("z_equiv: separating-set rule says " + std::string(by_sep ? "equal" : "distinct") +
                               " but K_{Y,S} regions are " + (by_region ? "equal" : "distinct") + " for " +
                               a.to_string() + ", " + b.to_string());
    return by_sep;
  }

  CoverConditions cover_conditions(const ZPoint& z, const SalElement& s) const {
    const SignVector& x = s.face;
    const SignVector& t = s.tope;
    const SignVector& y = z.face;
    CoverConditions c;
    const bool t_is_xy = t == compose(x, y);
    c.signs = t_is_xy && z.tope == compose(y, x);
    c.containment = t_is_xy && face_within_local_region(x, z);
    c.sides = sides_agree(z, s);
    c.membership = membership_by_point(z, s.face, s.tope);
    return c;
  }

  /// z ∈ U_{X,T}. All four characterizations must agree.
  bool in_cover(const ZPoint& z, const SalElement& s) const {
    const auto c = cover_conditions(z, s);
    if (!c.agree())
      throw InvariantViolation("in_cover: conditions disagree (" + c.to_string() + ") for " + z.to_string() +
                               " v=" + salcom::to_string(z.v) + " s=" + s.to_string());
    return c.signs;
  }

  /// v ∈ K_{X,T} and (v,S) ~ (v,T), using only the signs of the f_e at v.
  /// T need not lie above Y here.
  bool membership_by_point(const ZPoint& z, const SignVector& x, const SignVector& t) const {
    if (!z.in_k) return false;
    bool inside = true;
    x.zeros().for_each([&](std::size_t e) {
      if (static_cast<int>(t[e]) * static_cast<int>(z.position[e]) <= 0) inside = false;
    });
    if (!inside) return false;
    return !separator(z.tope, t).intersects(z.position.zeros());
  }

  LocalPoset sal_at(const ZPoint& z) const {
    LocalPoset lp;
    for (std::size_t i = 0; i < sal_.size(); ++i)
      if (in_cover(z, sal_.label(i))) lp.members.push_back(i);
    lp.poset = sal_.induced(lp.members);
    return lp;
  }

  NerveReport verify_nerve() const {
    NerveReport report;
    auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
    check_containment(report);
    check_kz(report);

    const auto reps = representatives();
    report.representatives = reps.size();
    for (std::size_t zi = 0; zi < reps.size(); ++zi) {
      const ZPoint& z = reps[zi];
      const std::string tag = z.to_string() + " v=" + salcom::to_string(z.v);

      std::vector<std::size_t> members;
      Bitset member_mask(sal_.size());
      bool consistent = true;
      for (std::size_t i = 0; i < sal_.size(); ++i) {
        ++report.cover_pairs;
        try {
          if (in_cover(z, sal_.label(i))) {
            members.push_back(i);
            member_mask.set(i);
          }
        } catch (const InvariantViolation& e) {
          fail(e.what());
          consistent = false;
        }
      }
      if (!consistent) continue;

      // local cone and its own COM
      Realization local;
      try {
        local = enumerate_covectors(arrangement_.with_region(local_region(z)));
      } catch (const UsageError& e) {
        fail(tag + ": cannot enumerate L(A,K_z): " + e.what());
        continue;
      }
      if (auto ax = check_com(local.com); !ax.ok()) fail(tag + ": L(A,K_z) violates the axioms: " + ax.describe());

      // X -> (X, X∘Y) onto the local poset
      std::vector<std::size_t> image;
      bool mapped = true;
      for (const auto& x : local.com.covectors()) {
        const auto idx = sal_index({x, compose(x, z.face)});
        if (!idx || !member_mask.test(*idx)) {
          fail(tag + ": X=" + x.to_string() + " maps to " + SalElement{x, compose(x, z.face)}.to_string() +
               ", which is not in Sal(A,K)_z");
          mapped = false;
          continue;
        }
        image.push_back(static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), *idx) -
                                                 members.begin()));
      }
      if (mapped && image.size() != members.size()) {
        fail(tag + ": |L(A,K_z)| = " + std::to_string(image.size()) + " but |Sal(A,K)_z| = " +
             std::to_string(members.size()));
        mapped = false;
      }
      const SalvettiPoset local_sal = sal_.induced(members);
      if (mapped) {
        try {
          if (!verify_order_iso(image, face_poset(local.com), local_sal))
            fail(tag + ": X -> (X, X∘Y) is a bijection but not an order isomorphism");
        } catch (const UsageError& e) {
          fail(tag + ": X -> (X, X∘Y) is not a bijection: " + e.what());
        }
      }

      if (members.empty())
        fail(tag + ": Sal(A,K)_z is empty");
      else if (!is_reduced_acyclic(order_complex(local_sal)))
        fail(tag + ": |Sal(A,K)_z| is not acyclic");

      // membership is an up-set of the Salvetti order
      for (auto i : members)
        if (!sal_.up_set(i).is_subset_of(member_mask))
          fail(tag + ": membership not monotone above " + sal_.label(i).to_string());

      // any tope T with Y∘T = S represents the same z
      for (const auto& t : topes_) {
        if (t == z.tope || compose(z.face, t) != z.tope) continue;
        for (std::size_t i = 0; i < sal_.size(); ++i) {
          ZPoint raw = z;
          raw.tope = t;
          if (membership_by_point(raw, sal_.label(i).face, sal_.label(i).tope) != member_mask.test(i))
            fail(tag + ": representative (v," + t.to_string() + ") gives a different cover at " +
                 sal_.label(i).to_string());
        }
      }
    }
    return report;
  }

private:
  ZPoint make_zpoint(const SignVector& y, Point v, const SignVector& t) const {
    if (!is_tope(t)) throw UsageError("z-point: \"" + t.to_string() + "\" is not a tope");
    ZPoint z;
    z.position = arrangement_.sign_of(v);
    z.in_k = arrangement_.region().contains(v);
    if (!z.in_k) throw UsageError("z-point: v = " + salcom::to_string(v) + " is not in K");
    z.face = y;
    z.tope = compose(y, t);
    z.v = std::move(v);
    return z;
  }

  bool is_tope(const SignVector& t) const { return std::binary_search(topes_.begin(), topes_.end(), t); }

  std::size_t covector_index(const SignVector& x) const {
    auto i = realization_.com.index_of(x);
    if (!i) throw UsageError("\"" + x.to_string() + "\" is not a covector");
    return *i;
  }

  // F_X ∩ K ⊆ K_z, one cached implication per constraint of K_z.
  bool face_within_local_region(const SignVector& x, const ZPoint& z) const {
    const std::size_t xi = covector_index(x);
    const std::size_t n = arrangement_.size();
    const auto& kcs = arrangement_.region().constraints();
    Region face;
    bool face_built = false;
    auto face_region = [&]() -> const Region& {
      if (!face_built) {
        face = arrangement_.face_region(x);
        face_built = true;
      }
      return face;
    };
    for (std::size_t k = 0; k < kcs.size(); ++k) {
      auto& slot = k_cache_[xi * kcs.size() + k];
      if (slot < 0) slot = implies(face_region(), kcs[k]) ? 1 : 0;
      if (!slot) return false;
    }
    bool ok = true;
    z.face.zeros().for_each([&](std::size_t e) {
      if (!ok) return;
      const Sign s = z.tope[e];
      auto& slot = halfspace_cache_[(xi * n + e) * 2 + (s == Sign::plus ? 1 : 0)];
      if (slot < 0) slot = implies(face_region(), arrangement_.face_constraint(e, s)) ? 1 : 0;
      ok = slot != 0;
    });
    return ok;
  }

  // Sides read off relative-interior witness points: every hyperplane through
  // F_X has F_Y on the side of F_T, and every hyperplane through v has F_X on
  // the side of F_S.
  bool sides_agree(const ZPoint& z, const SalElement& s) const {
    const Point& wx = realization_.witness(s.face);
    const Point& wt = realization_.witness(s.tope);
    const Point& ws = realization_.witness(z.tope);
    for (std::size_t e = 0; e < arrangement_.size(); ++e) {
      const auto& f = arrangement_.hyperplane(e);
      const int at_x = f(wx).sign();
      if (at_x == 0) {
        const int at_y = f(z.v).sign();
        if (at_y == 0 || at_y != f(wt).sign()) return false;
      }
      if (f(z.v).sign() == 0 && (at_x == 0 || at_x != f(ws).sign())) return false;
    }
    return true;
  }

  // If (X,T) ⪯ (X',T') then K_{X,T} ⊆ K_{X',T'}; checked on covering pairs,
  // which suffices by transitivity of inclusion.
  void check_containment(NerveReport& report) const {
    for (auto [i, j] : sal_.hasse()) {
      ++report.containment_pairs;
      const auto& a = sal_.label(i);
      const auto& b = sal_.label(j);
      bool combinatorial = true;
      b.face.zeros().for_each([&](std::size_t e) {
        if (a.face[e] != Sign::zero || a.tope[e] != b.tope[e]) combinatorial = false;
      });
      if (!combinatorial)
        report.failures.push_back("containment: " + a.to_string() + " ⪯ " + b.to_string() +
                                  " but some zero of X' is not a zero of X with T_e = T'_e");
      if (!region_subset(subregion(arrangement_, a.face, a.tope), subregion(arrangement_, b.face, b.tope)))
        report.failures.push_back("containment: K of " + a.to_string() + " is not inside K of " + b.to_string());
    }
  }

  // (v,S1) ~ (v,S2) iff K_{Y,S1} = K_{Y,S2}, for every covector Y and every
  // pair of topes in its fiber (z_equiv runs both rules).
  void check_kz(NerveReport& report) const {
    for (const auto& y : realization_.com.covectors()) {
      const auto f = fiber(y);
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i; j < f.size(); ++j) {
          ++report.kz_pairs;
          try {
            // distinct fiber elements are distinct points of Z
            const bool eq = z_equiv(zpoint_at(y, f[i]), zpoint_at(y, f[j]));
            if ((i == j) != eq)
              report.failures.push_back("Kz: fiber over " + y.to_string() + " identifies " + f[i].to_string() +
                                        " with " + f[j].to_string());
          } catch (const InvariantViolation& e) {
            report.failures.push_back(std::string("Kz: ") + e.what());
          }
        }
    }
  }

  Arrangement arrangement_;
  Realization realization_;
  std::vector<SignVector> topes_;
  SalvettiPoset sal_;
  std::unordered_map<SalElement, std::size_t, SalElementHash> sal_index_;
  mutable std::vector<std::int8_t> halfspace_cache_;
  mutable std::vector<std::int8_t> k_cache_;
};

}  // namespace salcom
