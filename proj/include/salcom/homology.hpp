#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "salcom/errors.hpp"
#include "salcom/rational.hpp"
#include "salcom/simplicial.hpp"

namespace salcom {

/// Dense integer matrix, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw UsageError("IntegerMatrix: ragged initializer");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Sparse integer matrix stored by columns; entries in each column sorted by row.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> columns;

  IntegerMatrix to_dense() const {
    IntegerMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (auto [i, v] : columns[j]) m(i, j) = v;
    return m;
  }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }
};

/// boundary[k] is ∂_k : C_k -> C_{k-1} for k >= 1; boundary[0] is the zero map.
struct ChainComplex {
  std::vector<std::size_t> chain_ranks;
  std::vector<SparseMatrix> boundary;
};

struct SmithForm {
  std::vector<BigInt> factors;  // nonzero invariant factors, each dividing the next
  std::size_t rank = 0;
};

struct HomologyProfile {
  std::vector<std::size_t> betti;          // degrees 0..dim
  std::vector<std::size_t> reduced_betti;  // betti with degree 0 reduced by one
  std::vector<std::vector<BigInt>> torsion;

  bool torsion_free() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
  }
};

/// Standard simplicial boundary; vertices ordered by index, so the i-th face
/// of a k-simplex enters with sign (-1)^i.
inline ChainComplex boundary_matrices(const SimplicialComplex& c) {
  ChainComplex cc;
  const int top = c.dimension();
  for (int k = 0; k <= top; ++k) cc.chain_ranks.push_back(c.count(static_cast<std::size_t>(k)));
  if (top < 0) return cc;
  cc.boundary.push_back(SparseMatrix{0, c.count(0), std::vector<std::vector<std::pair<std::uint32_t, long long>>>(c.count(0))});
  for (int k = 1; k <= top; ++k) {
    const auto& faces = c.simplices(static_cast<std::size_t>(k - 1));
    const auto& cells = c.simplices(static_cast<std::size_t>(k));
    SparseMatrix m{faces.size(), cells.size(), {}};
    m.columns.resize(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
      auto& col = m.columns[j];
      for (std::size_t i = 0; i < cells[j].size(); ++i) {
        Simplex f = cells[j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = std::lower_bound(faces.begin(), faces.end(), f);
        if (it == faces.end() || *it != f) throw UsageError("boundary_matrices: complex is not closed under faces");
        col.emplace_back(static_cast<std::uint32_t>(it - faces.begin()), i % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

namespace detail {

struct CoefficientOverflow {};

template <class Int>
Int checked_sub_mul(const Int& a, const Int& k, const Int& b) {
  if constexpr (std::is_same_v<Int, long long>) {
    long long p, r;
    if (__builtin_mul_overflow(k, b, &p) || __builtin_sub_overflow(a, p, &r)) throw CoefficientOverflow{};
    return r;
  } else {
    return a - k * b;
  }
}

template <class Int>
bool is_unit(const Int& v) {
  return v == 1 || v == -1;
}

// Diagonalizes a dense matrix; returns the nonzero invariant factors.
inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto smallest = [&](std::size_t t, bool whole) {
    std::pair<std::size_t, std::size_t> best{rows, cols};
    BigInt best_abs = -1;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (!whole && i != t && j != t) continue;
        if (a[i][j] == 0) continue;
        BigInt m = abs(a[i][j]);
        if (best_abs < 0 || m < best_abs) {
          best_abs = m;
          best = {i, j};
        }
      }
    return best;
  };
  auto bring = [&](std::size_t t, std::pair<std::size_t, std::size_t> at) {
    std::swap(a[t], a[at.first]);
    for (auto& row : a) std::swap(row[t], row[at.second]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto at = smallest(t, true);
    if (at.first == rows) break;
    bring(t, at);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        bring(t, smallest(t, false));
        continue;
      }
      // divisibility: fold an offending row into row t and reduce again
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

// Eliminates unit pivots sparsely, then hands the residual block to dense_smith.
template <class Int>
std::vector<BigInt> sparse_smith(const SparseMatrix& m) {
  using Entry = std::pair<std::uint32_t, Int>;
  std::vector<std::vector<Entry>> rows(m.rows);
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (auto [i, v] : m.columns[j]) {
      if (v == 0) continue;
      rows[i].emplace_back(static_cast<std::uint32_t>(j), Int(v));
      col_rows[j].push_back(i);
    }
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });

  std::vector<bool> row_alive(m.rows, true), col_alive(m.cols, true);
  auto entry = [&](std::uint32_t r, std::uint32_t c) -> const Int* {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };

  std::size_t units = 0;
  std::vector<Entry> merged;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::uint32_t c = 0; c < m.cols; ++c) {
      if (!col_alive[c]) continue;
      auto& cand = col_rows[c];
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      std::erase_if(cand, [&](std::uint32_t r) { return !row_alive[r] || entry(r, c) == nullptr; });
      if (cand.empty()) {
        col_alive[c] = false;
        continue;
      }
      std::uint32_t pivot = 0;
      bool found = false;
      for (auto r : cand)
        if (is_unit(*entry(r, c)) && (!found || rows[r].size() < rows[pivot].size())) {
          pivot = r;
          found = true;
        }
      if (!found) continue;
      const Int u = *entry(pivot, c);
      const auto& prow = rows[pivot];
      for (auto r : cand) {
        if (r == pivot) continue;
        const Int k = *entry(r, c) * u;
        merged.clear();
        auto& row = rows[r];
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < prow.size()) {
          if (b == prow.size() || (a < row.size() && row[a].first < prow[b].first)) {
            merged.push_back(row[a++]);
          } else if (a == row.size() || prow[b].first < row[a].first) {
            Int v = checked_sub_mul(Int(0), k, prow[b].second);
            col_rows[prow[b].first].push_back(r);
            merged.emplace_back(prow[b].first, std::move(v));
            ++b;
          } else {
            Int v = checked_sub_mul(row[a].second, k, prow[b].second);
            if (v != 0) merged.emplace_back(row[a].first, std::move(v));
            ++a;
            ++b;
          }
        }
        row.swap(merged);
      }
      row_alive[pivot] = false;
      col_alive[c] = false;
      ++units;
      progress = true;
    }
  }

  std::vector<std::uint32_t> live_cols;
  for (std::uint32_t c = 0; c < m.cols; ++c)
    if (col_alive[c]) live_cols.push_back(c);
  std::vector<std::vector<BigInt>> residual;
  for (std::uint32_t r = 0; r < m.rows; ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    std::vector<BigInt> dense(live_cols.size());
    for (const auto& [c, v] : rows[r]) {
      auto it = std::lower_bound(live_cols.begin(), live_cols.end(), c);
      dense[static_cast<std::size_t>(it - live_cols.begin())] = BigInt(v);
    }
    residual.push_back(std::move(dense));
  }
  std::vector<BigInt> factors(units, BigInt(1));
  for (auto& f : dense_smith(std::move(residual))) factors.push_back(std::move(f));
  return factors;
}

}  // namespace detail

inline SmithForm smith_normal_form(const SparseMatrix& m) {
  SmithForm s;
  try {
    s.factors = detail::sparse_smith<long long>(m);
  } catch (const detail::CoefficientOverflow&) {
    s.factors = detail::sparse_smith<BigInt>(m);
  }
  s.rank = s.factors.size();
  return s;
}

inline SmithForm smith_normal_form(const IntegerMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  SmithForm s;
  s.factors = detail::dense_smith(std::move(a));
  s.rank = s.factors.size();
  return s;
}

inline HomologyProfile betti(const SimplicialComplex& c) {
  HomologyProfile h;
  const int top = c.dimension();
  if (top < 0) return h;
  const auto cc = boundary_matrices(c);
  std::vector<SmithForm> snf(static_cast<std::size_t>(top) + 2);
  for (int k = 1; k <= top; ++k) snf[static_cast<std::size_t>(k)] = smith_normal_form(cc.boundary[static_cast<std::size_t>(k)]);
  for (int k = 0; k <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const std::size_t b = cc.chain_ranks[uk] - snf[uk].rank - snf[uk + 1].rank;
    h.betti.push_back(b);
    std::vector<BigInt> t;
    for (const auto& f : snf[uk + 1].factors)
      if (f > 1) t.push_back(f);
    h.torsion.push_back(std::move(t));
  }
  h.reduced_betti = h.betti;
  h.reduced_betti[0] -= 1;
  return h;
}

inline bool is_reduced_acyclic(const SimplicialComplex& c) {
  if (c.dimension() < 0) throw UsageError("is_reduced_acyclic: empty complex");
  const auto h = betti(c);
  return h.torsion_free() &&
         std::all_of(h.reduced_betti.begin(), h.reduced_betti.end(), [](std::size_t b) { return b == 0; });
}

/// Greedy elementary collapses, always removing the smallest free face
/// (ordered by dimension, then lexicographically) together with its unique
/// coface. True iff a single vertex remains; false is inconclusive.
inline bool try_collapse(const SimplicialComplex& c) {
  const int top = c.dimension();
  if (top < 0) return false;
  std::vector<std::size_t> offset(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top; ++k)
    offset[static_cast<std::size_t>(k) + 1] = offset[static_cast<std::size_t>(k)] + c.count(static_cast<std::size_t>(k));
  const std::size_t total = offset.back();

  std::vector<std::vector<std::size_t>> facets(total), cofaces(total);
  for (int k = 1; k <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const auto& lower = c.simplices(uk - 1);
    const auto& cells = c.simplices(uk);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const std::size_t id = offset[uk] + j;
      for (std::size_t i = 0; i < cells[j].size(); ++i) {
        Simplex f = cells[j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t fid =
            offset[uk - 1] + static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), f) - lower.begin());
        facets[id].push_back(fid);
        cofaces[fid].push_back(id);
      }
    }
  }

  std::vector<bool> alive(total, true);
  std::vector<std::size_t> live_cofaces(total);
  std::set<std::size_t> free_faces;
  for (std::size_t id = 0; id < total; ++id) {
    live_cofaces[id] = cofaces[id].size();
    if (live_cofaces[id] == 1) free_faces.insert(id);
  }
  std::size_t remaining = total;
  auto drop_facet_counts = [&](std::size_t id, std::size_t skip) {
    for (auto f : facets[id]) {
      if (f == skip || !alive[f]) continue;
      if (--live_cofaces[f] == 1) free_faces.insert(f);
    }
  };
  while (!free_faces.empty()) {
    const std::size_t sigma = *free_faces.begin();
    free_faces.erase(free_faces.begin());
    if (!alive[sigma] || live_cofaces[sigma] != 1) continue;
    const std::size_t tau = *std::find_if(cofaces[sigma].begin(), cofaces[sigma].end(), [&](std::size_t t) { return alive[t]; });
    alive[sigma] = alive[tau] = false;
    remaining -= 2;
    drop_facet_counts(tau, sigma);
    drop_facet_counts(sigma, tau);
  }
  return remaining == 1;
}

}  // namespace salcom
