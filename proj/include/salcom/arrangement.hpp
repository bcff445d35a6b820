#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "salcom/com.hpp"
#include "salcom/errors.hpp"
#include "salcom/region.hpp"
#include "salcom/sign_vector.hpp"

namespace salcom {

/// Cooriented affine hyperplanes {f_e = 0} (positive side f_e > 0) together
/// with an open polyhedral region K. Duplicates are allowed.
class Arrangement {
public:
  Arrangement() = default;

  /// Validates and normalizes: rejects zero normals and equality constraints
  /// in K, drops tautological K constraints, and requires K nonempty.
  Arrangement(std::size_t dim, std::vector<AffineForm> hyperplanes, Region region = {})
      : dim_(dim), hyperplanes_(std::move(hyperplanes)), region_(dim) {
    if (region.dim() != dim && !region.constraints().empty())
      throw UsageError("region has dimension " + std::to_string(region.dim()) + ", arrangement has " +
                       std::to_string(dim));
    for (std::size_t e = 0; e < hyperplanes_.size(); ++e) {
      const auto& h = hyperplanes_[e];
      if (h.dim() != dim)
        throw UsageError("hyperplanes[" + std::to_string(e) + "] has dimension " + std::to_string(h.dim()) +
                         ", expected " + std::to_string(dim));
      if (h.is_constant()) throw UsageError("hyperplanes[" + std::to_string(e) + "] has zero normal vector");
    }
    const auto& cs = region.constraints();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      if (c.rel != Relation::positive)
        throw UsageError("region[" + std::to_string(i) + "]: K must be open, equality constraints are not allowed");
      if (c.form.is_constant()) {
        if (c.form.b > 0) continue;
        throw UsageError("region[" + std::to_string(i) + "]: constant constraint " + c.to_string() +
                         " makes K empty");
      }
      region_.add(c);
    }
    if (!feasible(region_).feasible) {
      // name the first constraint that empties the prefix before it
      Region prefix(dim);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].form.is_constant()) continue;
        prefix.add(cs[i]);
        if (!feasible(prefix).feasible)
          throw UsageError("K must be nonempty: region[" + std::to_string(i) + "] (" + cs[i].to_string() +
                           ") is inconsistent with the constraints before it");
      }
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<AffineForm>& hyperplanes() const { return hyperplanes_; }
  const AffineForm& hyperplane(std::size_t e) const { return hyperplanes_[e]; }
  const Region& region() const { return region_; }
  bool is_full_space() const { return region_.constraints().empty(); }

  Arrangement with_region(Region k) const { return Arrangement(dim_, hyperplanes_, std::move(k)); }

  // Sign of f_e at v for every e.
  SignVector sign_of(const Point& v) const {
    SignVector x(size());
    for (std::size_t e = 0; e < size(); ++e) x.set(e, static_cast<Sign>(hyperplanes_[e](v).sign()));
    return x;
  }

  Constraint face_constraint(std::size_t e, Sign s) const {
    switch (s) {
      case Sign::plus: return {hyperplanes_[e], Relation::positive};
      case Sign::minus: return {-hyperplanes_[e], Relation::positive};
      case Sign::zero: break;
    }
    return {hyperplanes_[e], Relation::zero};
  }

  /// F_X ∩ K as a region.
  Region face_region(const SignVector& x) const {
    require_length(x, "face_region");
    Region r = region_;
    for (std::size_t e = 0; e < size(); ++e) r.add(face_constraint(e, x[e]));
    return r;
  }

private:
  void require_length(const SignVector& x, const char* op) const {
    if (x.size() != size())
      throw UsageError(std::string(op) + ": sign vector \"" + x.to_string() + "\" has length " +
                       std::to_string(x.size()) + ", arrangement has " + std::to_string(size()) + " hyperplanes");
  }

  std::size_t dim_ = 0;
  std::vector<AffineForm> hyperplanes_;
  Region region_;
};

/// L(A,K) with one relative-interior witness point per covector.
struct Realization {
  Com com;
  std::vector<Point> witnesses;  // aligned with com.covectors()

  const Point& witness(const SignVector& x) const {
    auto i = com.index_of(x);
    if (!i) throw UsageError("\"" + x.to_string() + "\" is not a covector");
    return witnesses[*i];
  }
};

namespace detail {
inline Realization assemble(std::size_t n, std::vector<std::pair<SignVector, Point>> found) {
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Realization r;
  std::vector<SignVector> xs;
  xs.reserve(found.size());
  for (auto& [x, v] : found) {
    xs.push_back(x);
    r.witnesses.push_back(std::move(v));
  }
  r.com = Com(n, std::move(xs));
  if (r.com.size() != r.witnesses.size()) throw InvariantViolation("enumeration produced duplicate covectors");
  return r;
}
}  // namespace detail

/// Depth-first sign assignment over the hyperplanes in index order, trying
/// -, 0, + at each level and pruning partial assignments whose face region
/// is already empty.
inline Realization enumerate_covectors(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<std::pair<SignVector, Point>> found;
  SignVector x(n);
  auto dfs = [&](auto&& self, std::size_t e, const Region& region) -> void {
    if (e == n) {
      auto res = feasible(region);
      if (res.feasible) found.emplace_back(x, std::move(*res.witness));
      return;
    }
    for (Sign s : {Sign::minus, Sign::zero, Sign::plus}) {
      Region next = region;
      next.add(a.face_constraint(e, s));
      if (e + 1 < n && !feasible(next).feasible) continue;
      x.set(e, s);
      self(self, e + 1, next);
    }
    x.set(e, Sign::zero);
  };
  if (n == 0) {
    auto res = feasible(a.region());
    if (!res.feasible) throw UsageError("K must be nonempty");
    found.emplace_back(x, std::move(*res.witness));
  } else {
    dfs(dfs, 0, a.region());
  }
  return detail::assemble(n, std::move(found));
}

/// Unpruned scan of all 3^|E| sign vectors.
inline Realization enumerate_covectors_exhaustive(const Arrangement& a) {
  const std::size_t n = a.size();
  if (n > 20) throw UsageError("exhaustive enumeration limited to 20 hyperplanes");
  std::vector<std::pair<SignVector, Point>> found;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    SignVector x(n);
    std::size_t c = code;
    for (std::size_t e = 0; e < n; ++e, c /= 3) x.set(e, static_cast<Sign>(static_cast<int>(c % 3) - 1));
    auto res = feasible(a.face_region(x));
    if (res.feasible) found.emplace_back(std::move(x), std::move(*res.witness));
  }
  return detail::assemble(n, std::move(found));
}

/// K_{X,T}: K together with sign(T_e) f_e > 0 for every e with X_e = 0.
inline Region subregion(const Arrangement& a, const SignVector& x, const SignVector& t) {
  if (x.size() != a.size() || t.size() != a.size())
    throw UsageError("subregion: sign vectors must have length " + std::to_string(a.size()));
  Region r = a.region();
  x.zeros().for_each([&](std::size_t e) {
    if (t[e] == Sign::zero)
      throw UsageError("subregion: T=\"" + t.to_string() + "\" vanishes at coordinate " + std::to_string(e) +
                       " where X=\"" + x.to_string() + "\" does");
    r.add(a.face_constraint(e, t[e]));
  });
  return r;
}

}  // namespace salcom
