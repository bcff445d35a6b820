#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "salcom/arrangement.hpp"
#include "salcom/errors.hpp"

namespace salcom {

struct CorpusOptions {
  std::uint64_t seed = 42;
  std::size_t count = 25;
  std::size_t max_dim = 2;          // each instance draws d from [1, max_dim]
  std::size_t max_hyperplanes = 4;  // each instance draws |E| from [1, max_hyperplanes]
  long long coeff_bound = 3;        // numerators in [-B, B], denominators in [1, B]
  std::size_t max_region_halfspaces = 3;
  double duplicate_probability = 0.1;
};

/// Seeded random arrangements. The seed fully determines the output.
class CorpusGenerator {
public:
  explicit CorpusGenerator(CorpusOptions opts) : opts_(opts), rng_(opts.seed) {
    if (opts_.max_dim == 0) throw UsageError("corpus: --dim must be at least 1");
    if (opts_.coeff_bound < 1) throw UsageError("corpus: --coeff-bound must be at least 1");
  }

  std::vector<Arrangement> generate() {
    std::vector<Arrangement> out;
    out.reserve(opts_.count);
    for (std::size_t i = 0; i < opts_.count; ++i) out.push_back(next());
    return out;
  }

  Arrangement next() {
    const std::size_t d = pick(1, opts_.max_dim);
    const std::size_t m = opts_.max_hyperplanes == 0 ? 0 : pick(1, opts_.max_hyperplanes);
    std::vector<AffineForm> hs;
    std::bernoulli_distribution dup(opts_.duplicate_probability), flip(0.5);
    for (std::size_t e = 0; e < m; ++e) {
      if (e > 0 && dup(rng_)) {
        AffineForm copy = hs[pick(0, e - 1)];
        hs.push_back(flip(rng_) ? -copy : copy);
      } else {
        hs.push_back(nonconstant_form(d));
      }
    }
    for (;;) {
      Region k(d);
      const std::size_t halfspaces = pick(0, opts_.max_region_halfspaces);
      for (std::size_t i = 0; i < halfspaces; ++i) k.add_positive(nonconstant_form(d));
      if (feasible(k).feasible) return Arrangement(d, hs, std::move(k));
    }
  }

private:
  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Rational coefficient() {
    const long long b = opts_.coeff_bound;
    const long long num = std::uniform_int_distribution<long long>(-b, b)(rng_);
    const long long den = std::uniform_int_distribution<long long>(1, b)(rng_);
    return Rational(num, den);
  }

  AffineForm nonconstant_form(std::size_t d) {
    AffineForm f;
    do {
      f.a.clear();
      for (std::size_t i = 0; i < d; ++i) f.a.push_back(coefficient());
    } while (f.is_constant());
    f.b = coefficient();
    return f;
  }

  CorpusOptions opts_;
  std::mt19937_64 rng_;
};

inline std::vector<Arrangement> generate_corpus(const CorpusOptions& opts) { return CorpusGenerator(opts).generate(); }

}  // namespace salcom
