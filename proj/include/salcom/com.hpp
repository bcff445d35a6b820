#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "salcom/errors.hpp"
#include "salcom/poset.hpp"
#include "salcom/sign_vector.hpp"

namespace salcom {

/// A finite, nonempty set of equal-length sign vectors, kept sorted in
/// canonical order without duplicates. Whether the set satisfies the COM
/// axioms is a separate question answered by check_com().
class Com {
public:
  Com() = default;

  Com(std::size_t n, std::vector<SignVector> covectors) : n_(n), covectors_(std::move(covectors)) {
    if (covectors_.empty()) throw UsageError("a covector set must be nonempty");
    for (const auto& x : covectors_)
      if (x.size() != n_)
        throw UsageError("covector \"" + x.to_string() + "\" has length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(n_));
    std::sort(covectors_.begin(), covectors_.end());
    covectors_.erase(std::unique(covectors_.begin(), covectors_.end()), covectors_.end());
  }

  explicit Com(const std::vector<SignVector>& covectors)
      : Com(covectors.empty() ? 0 : covectors.front().size(), covectors) {}

  std::size_t ground_size() const { return n_; }
  std::size_t size() const { return covectors_.size(); }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const SignVector& operator[](std::size_t i) const { return covectors_[i]; }

  std::optional<std::size_t> index_of(const SignVector& x) const {
    auto it = std::lower_bound(covectors_.begin(), covectors_.end(), x);
    if (it == covectors_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - covectors_.begin());
  }
  bool contains(const SignVector& x) const { return index_of(x).has_value(); }

  friend bool operator==(const Com&, const Com&) = default;

private:
  std::size_t n_ = 0;
  std::vector<SignVector> covectors_;
};

// Newline-separated sign strings; blank lines and '#' comments are skipped.
inline Com read_com(std::istream& in) {
  std::vector<SignVector> xs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    try {
      xs.push_back(SignVector::parse(std::string_view(line).substr(first, last - first + 1)));
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (xs.empty()) throw UsageError("covector file contains no sign vectors");
  const std::size_t n = xs.front().size();
  return Com(n, std::move(xs));
}

inline void write_com(std::ostream& out, const Com& l) {
  for (const auto& x : l.covectors()) out << x.to_string() << '\n';
}

struct FaceSymmetryWitness {
  SignVector x, y;
};
struct StrongEliminationWitness {
  SignVector x, y;
  std::size_t e;
};

struct AxiomReport {
  bool fs_ok = true;
  bool se_ok = true;
  std::optional<FaceSymmetryWitness> fs_witness;
  std::optional<StrongEliminationWitness> se_witness;

  bool ok() const { return fs_ok && se_ok; }

  std::string describe() const {
    std::string s = fs_ok ? "FS ok" : "FS fails: X=" + fs_witness->x.to_string() + " Y=" + fs_witness->y.to_string();
    s += "; ";
    s += se_ok ? "SE ok"
               : "SE fails: X=" + se_witness->x.to_string() + " Y=" + se_witness->y.to_string() +
                     " e=" + std::to_string(se_witness->e);
    return s;
  }
};

/// Brute-force check of face symmetry (X∘(-Y) ∈ L) and strong elimination.
///
/// FS pairs are scanned with X and Y both ascending in canonical order. SE
/// pairs are scanned with X ascending and Y descending, so the first pair
/// examined for a given X is the one farthest from it; e ascends within
/// Sep(X,Y). The first failure found is reported.
inline AxiomReport check_com(const std::vector<SignVector>& set) {
  const Com l(set);  // validates nonempty and uniform length, sorts, dedups
  const auto& xs = l.covectors();
  const std::size_t m = xs.size();
  const std::size_t n = l.ground_size();
  AxiomReport report;

  for (std::size_t i = 0; i < m && report.fs_ok; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!l.contains(compose(xs[i], negate(xs[j])))) {
        report.fs_ok = false;
        report.fs_witness = FaceSymmetryWitness{xs[i], xs[j]};
        break;
      }

  std::vector<std::vector<std::size_t>> zero_at(n);
  for (std::size_t k = 0; k < m; ++k) xs[k].zeros().for_each([&](std::size_t e) { zero_at[e].push_back(k); });

  for (std::size_t i = 0; i < m && report.se_ok; ++i) {
    for (std::size_t jj = m; jj-- > 0 && report.se_ok;) {
      const IndexSet sep = separator(xs[i], xs[jj]);
      if (sep.none()) continue;
      const SignVector target = compose(xs[i], xs[jj]);
      const Bitset fixed = sep.complement();
      const Bitset want_plus = target.plus_mask() & fixed;
      const Bitset want_minus = target.minus_mask() & fixed;
      sep.for_each([&](std::size_t e) {
        if (!report.se_ok) return;
        const bool found = std::any_of(zero_at[e].begin(), zero_at[e].end(), [&](std::size_t k) {
          return (xs[k].plus_mask() & fixed) == want_plus && (xs[k].minus_mask() & fixed) == want_minus;
        });
        if (!found) {
          report.se_ok = false;
          report.se_witness = StrongEliminationWitness{xs[i], xs[jj], e};
        }
      });
    }
  }
  return report;
}

inline AxiomReport check_com(const Com& l) { return check_com(l.covectors()); }

inline bool is_oriented_matroid(const Com& l) { return l.contains(SignVector(l.ground_size())); }

/// Covectors maximal under leq, in canonical order.
inline std::vector<SignVector> topes(const Com& l) {
  std::vector<SignVector> out;
  for (const auto& x : l.covectors()) {
    const bool maximal = std::none_of(l.covectors().begin(), l.covectors().end(),
                                      [&](const SignVector& y) { return y != x && leq(x, y); });
    if (maximal) out.push_back(x);
  }
  return out;
}

inline FinitePoset<SignVector> face_poset(const Com& l) {
  return FinitePoset<SignVector>::from_relation(l.covectors(),
                                                [](const SignVector& x, const SignVector& y) { return leq(x, y); });
}

struct Semisimplification {
  Com com;
  // For each original coordinate: the coordinate of `com` carrying the same
  // function, or nullopt when the original coordinate was constant.
  std::vector<std::optional<std::size_t>> coordinate_image;
  // covector_image[i] = index in `com` of the restriction of original covector i.
  std::vector<std::size_t> covector_image;

  bool is_identity() const {
    for (std::size_t e = 0; e < coordinate_image.size(); ++e)
      if (coordinate_image[e] != e) return false;
    return true;
  }
};

/// Drops constant coordinates and merges identical coordinate functions,
/// keeping the lowest index of each group. Coordinates that agree only up to
/// negation stay separate.
inline Semisimplification semisimplify(const Com& l) {
  const std::size_t n = l.ground_size();
  const auto& xs = l.covectors();
  auto column = [&](std::size_t e) {
    std::vector<Sign> c;
    c.reserve(xs.size());
    for (const auto& x : xs) c.push_back(x[e]);
    return c;
  };

  Semisimplification out;
  out.coordinate_image.assign(n, std::nullopt);
  std::vector<std::size_t> kept;
  std::vector<std::vector<Sign>> kept_columns;
  for (std::size_t e = 0; e < n; ++e) {
    auto c = column(e);
    if (std::all_of(c.begin(), c.end(), [&](Sign s) { return s == c.front(); })) continue;
    auto it = std::find(kept_columns.begin(), kept_columns.end(), c);
    if (it != kept_columns.end()) {
      out.coordinate_image[e] = static_cast<std::size_t>(it - kept_columns.begin());
      continue;
    }
    out.coordinate_image[e] = kept.size();
    kept.push_back(e);
    kept_columns.push_back(std::move(c));
  }

  std::vector<SignVector> restricted;
  restricted.reserve(xs.size());
  for (const auto& x : xs) {
    SignVector y(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) y.set(k, x[kept[k]]);
    restricted.push_back(std::move(y));
  }
  out.com = Com(kept.size(), restricted);
  if (out.com.size() != xs.size()) throw InvariantViolation("semisimplify: restriction is not injective");
  out.covector_image.reserve(xs.size());
  for (const auto& y : restricted) out.covector_image.push_back(*out.com.index_of(y));
  return out;
}

}  // namespace salcom
