#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salcom/errors.hpp"
#include "salcom/rational.hpp"

namespace salcom {

/// f(v) = a·v + b over the rationals.
struct AffineForm {
  std::vector<Rational> a;
  Rational b;

  std::size_t dim() const { return a.size(); }
  bool is_constant() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r == 0; });
  }

  Rational operator()(const Point& v) const {
    if (v.size() != a.size())
      throw UsageError("point of dimension " + std::to_string(v.size()) + " evaluated against form of dimension " +
                       std::to_string(a.size()));
    Rational s = b;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
    return s;
  }

  AffineForm operator-() const {
    AffineForm r = *this;
    for (auto& x : r.a) x = -x;
    r.b = -r.b;
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].str();
    return s + "; " + b.str() + "]";
  }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

enum class Relation { positive, zero };

/// Either f(v) > 0 or f(v) = 0.
struct Constraint {
  AffineForm form;
  Relation rel = Relation::positive;

  bool satisfied_by(const Point& v) const {
    const int s = form(v).sign();
    return rel == Relation::positive ? s > 0 : s == 0;
  }

  std::string to_string() const { return form.to_string() + (rel == Relation::positive ? " > 0" : " = 0"); }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Intersection of open halfspaces and hyperplanes in Q^dim. Convex.
class Region {
public:
  Region() = default;
  explicit Region(std::size_t dim) : dim_(dim) {}
  Region(std::size_t dim, std::vector<Constraint> cs) : dim_(dim) {
    for (auto& c : cs) add(std::move(c));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  Region& add(Constraint c) {
    if (c.form.dim() != dim_)
      throw UsageError("constraint " + c.to_string() + " has dimension " + std::to_string(c.form.dim()) +
                       ", region has dimension " + std::to_string(dim_));
    constraints_.push_back(std::move(c));
    return *this;
  }
  Region& add_positive(AffineForm f) { return add({std::move(f), Relation::positive}); }
  Region& add_zero(AffineForm f) { return add({std::move(f), Relation::zero}); }

  bool contains(const Point& v) const {
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const Constraint& c) { return c.satisfied_by(v); });
  }

  Region intersect(const Region& other) const {
    if (other.dim_ != dim_) throw UsageError("region intersection: dimension mismatch");
    Region r = *this;
    for (const auto& c : other.constraints_) r.constraints_.push_back(c);
    return r;
  }

private:
  std::size_t dim_ = 0;
  std::vector<Constraint> constraints_;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<Point> witness;
};

namespace detail {

// Integer row c[0..d-1] · x + c[d], with a strictness flag. Rows are kept
// primitive (gcd 1); equality rows also have a positive leading coefficient.
struct FmRow {
  std::vector<BigInt> c;
  bool strict = true;

  friend bool operator==(const FmRow&, const FmRow&) = default;
  friend bool operator<(const FmRow& x, const FmRow& y) {
    if (x.strict != y.strict) return x.strict < y.strict;
    return x.c < y.c;
  }
};

inline void normalize(FmRow& row) {
  BigInt g = 0;
  for (const auto& v : row.c) g = gcd(g, v);
  if (g > 1)
    for (auto& v : row.c) v /= g;
  if (!row.strict) {
    auto lead = std::find_if(row.c.begin(), row.c.end(), [](const BigInt& v) { return v != 0; });
    if (lead != row.c.end() && *lead < 0)
      for (auto& v : row.c) v = -v;
  }
}

inline FmRow to_row(const Constraint& con) {
  const auto& f = con.form;
  BigInt l = 1;
  for (const auto& x : f.a) l = lcm(l, denominator(x));
  l = lcm(l, denominator(f.b));
  FmRow row;
  row.strict = con.rel == Relation::positive;
  row.c.reserve(f.a.size() + 1);
  for (const auto& x : f.a) row.c.push_back(numerator(x) * (l / denominator(x)));
  row.c.push_back(numerator(f.b) * (l / denominator(f.b)));
  normalize(row);
  return row;
}

// Returns false when a constant row is violated; drops satisfied constant rows.
inline bool settle_constants(std::vector<FmRow>& rows, std::size_t from_var) {
  bool ok = true;
  std::erase_if(rows, [&](const FmRow& r) {
    const bool constant = std::all_of(r.c.begin() + static_cast<std::ptrdiff_t>(from_var), r.c.end() - 1,
                                      [](const BigInt& v) { return v == 0; });
    if (!constant) return false;
    const BigInt& k = r.c.back();
    if (r.strict ? k <= 0 : k != 0) ok = false;
    return true;
  });
  return ok;
}

inline void dedupe(std::vector<FmRow>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

struct FmStep {
  std::optional<FmRow> substitution;  // equality solved for the variable
  std::vector<FmRow> lower, upper;    // strict bounds when no equality applied
};

// Value of -(sum_{j != k} c_j x_j + c_d) / c_k, given x_j for j > k.
inline Rational solve_for(const FmRow& row, std::size_t k, const Point& x) {
  const std::size_t d = row.c.size() - 1;
  Rational rest = Rational(row.c[d]);
  for (std::size_t j = k + 1; j < d; ++j)
    if (row.c[j] != 0) rest += Rational(row.c[j]) * x[j];
  return -rest / Rational(row.c[k]);
}

}  // namespace detail

/// Exact feasibility of a mixed strict/equality system by Fourier–Motzkin
/// elimination in ascending variable order. A feasible result carries a
/// witness built by back-substitution that takes the midpoint of each open
/// interval (bound ± 1 when half-unbounded, 0 when unconstrained), so it
/// satisfies every strict constraint strictly.
inline FeasibilityResult feasible(const Region& region) {
  using namespace detail;
  const std::size_t d = region.dim();
  std::vector<FmRow> rows;
  rows.reserve(region.constraints().size());
  for (const auto& c : region.constraints()) rows.push_back(to_row(c));

  std::vector<FmStep> steps(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (!settle_constants(rows, k)) return {};
    dedupe(rows);
    auto eq = std::find_if(rows.begin(), rows.end(), [&](const FmRow& r) { return !r.strict && r.c[k] != 0; });
    if (eq != rows.end()) {
      FmRow pivot = *eq;
      rows.erase(eq);
      const BigInt ck = pivot.c[k];
      const BigInt abs_ck = abs(ck);
      const int sgn = ck > 0 ? 1 : -1;
      for (auto& r : rows) {
        if (r.c[k] == 0) continue;
        const BigInt rk = r.c[k];
        for (std::size_t j = k; j <= d; ++j) r.c[j] = abs_ck * r.c[j] - sgn * rk * pivot.c[j];
        normalize(r);
      }
      steps[k].substitution = std::move(pivot);
      continue;
    }
    std::vector<FmRow> next;
    auto& step = steps[k];
    for (auto& r : rows) {
      if (r.c[k] > 0)
        step.lower.push_back(std::move(r));
      else if (r.c[k] < 0)
        step.upper.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& lo : step.lower)
      for (const auto& up : step.upper) {
        FmRow r;
        r.strict = true;
        r.c.resize(d + 1);
        const BigInt a = -up.c[k];
        const BigInt b = lo.c[k];
        for (std::size_t j = 0; j <= d; ++j) r.c[j] = a * lo.c[j] + b * up.c[j];
        normalize(r);
        next.push_back(std::move(r));
      }
    rows = std::move(next);
  }
  if (!settle_constants(rows, d)) return {};

  Point x(d);
  for (std::size_t k = d; k-- > 0;) {
    const auto& step = steps[k];
    if (step.substitution) {
      x[k] = solve_for(*step.substitution, k, x);
      continue;
    }
    std::optional<Rational> lo, hi;
    for (const auto& r : step.lower) {
      Rational v = solve_for(r, k, x);
      if (!lo || v > *lo) lo = v;
    }
    for (const auto& r : step.upper) {
      Rational v = solve_for(r, k, x);
      if (!hi || v < *hi) hi = v;
    }
    if (lo && hi)
      x[k] = (*lo + *hi) / 2;
    else if (lo)
      x[k] = *lo + 1;
    else if (hi)
      x[k] = *hi - 1;
    else
      x[k] = 0;
  }
  if (!region.contains(x)) throw InvariantViolation("feasible: back-substituted witness " + to_string(x) + " fails");
  return {true, std::move(x)};
}

/// True iff every point of `region` satisfies `c`.
inline bool implies(const Region& region, const Constraint& c) {
  if (c.form.dim() != region.dim()) throw UsageError("implies: dimension mismatch");
  auto empty_with = [&](Constraint extra) {
    Region r = region;
    r.add(std::move(extra));
    return !feasible(r).feasible;
  };
  if (c.rel == Relation::positive)
    return empty_with({-c.form, Relation::positive}) && empty_with({c.form, Relation::zero});
  return empty_with({c.form, Relation::positive}) && empty_with({-c.form, Relation::positive});
}

inline bool region_subset(const Region& inner, const Region& outer) {
  if (inner.dim() != outer.dim())
    throw UsageError("region_subset: dimensions " + std::to_string(inner.dim()) + " and " +
                     std::to_string(outer.dim()));
  return std::all_of(outer.constraints().begin(), outer.constraints().end(),
                     [&](const Constraint& c) { return implies(inner, c); });
}

inline bool region_equal(const Region& a, const Region& b) { return region_subset(a, b) && region_subset(b, a); }

}  // namespace salcom
