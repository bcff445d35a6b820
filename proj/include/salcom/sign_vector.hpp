#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "salcom/bitset.hpp"
#include "salcom/errors.hpp"

namespace salcom {

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline char sign_char(Sign s) {
  switch (s) {
    case Sign::minus: return '-';
    case Sign::zero: return '0';
    case Sign::plus: return '+';
  }
  return '?';
}

/// Element of {-,0,+}^n stored as a pair of disjoint bitmasks.
///
/// Ordering (operator<=>) is lexicographic over entries in ground-set order
/// with - < 0 < +. This is the canonical order used for sorting covectors,
/// choosing witnesses and serializing.
class SignVector {
public:
  SignVector() = default;
  explicit SignVector(std::size_t n) : n_(n), plus_(n), minus_(n) {}

  static SignVector parse(std::string_view text) {
    SignVector x(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case '+': x.plus_.set(i); break;
        case '-': x.minus_.set(i); break;
        case '0': break;
        default:
          throw UsageError("invalid sign character '" + std::string(1, text[i]) + "' at position " +
                           std::to_string(i) + " in \"" + std::string(text) + "\"");
      }
    }
    return x;
  }

  static SignVector from_masks(Bitset plus, Bitset minus) {
    if (plus.size() != minus.size()) throw UsageError("sign vector masks differ in length");
    if (plus.intersects(minus)) throw UsageError("sign vector masks overlap");
    SignVector x;
    x.n_ = plus.size();
    x.plus_ = std::move(plus);
    x.minus_ = std::move(minus);
    return x;
  }

  std::size_t size() const { return n_; }
  const Bitset& plus_mask() const { return plus_; }
  const Bitset& minus_mask() const { return minus_; }

  Sign operator[](std::size_t e) const {
    if (plus_.test(e)) return Sign::plus;
    if (minus_.test(e)) return Sign::minus;
    return Sign::zero;
  }

  void set(std::size_t e, Sign s) {
    plus_.assign(e, s == Sign::plus);
    minus_.assign(e, s == Sign::minus);
  }

  Bitset support() const { return plus_ | minus_; }
  Bitset zeros() const { return support().complement(); }
  bool is_zero() const { return plus_.none() && minus_.none(); }
  bool is_total() const { return support().count() == n_; }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) s[i] = sign_char((*this)[i]);
    return s;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;

  friend std::strong_ordering operator<=>(const SignVector& x, const SignVector& y) {
    if (x.n_ != y.n_) return x.n_ <=> y.n_;
    for (std::size_t w = 0; w < x.plus_.word_count(); ++w) {
      const auto diff = (x.plus_.word(w) ^ y.plus_.word(w)) | (x.minus_.word(w) ^ y.minus_.word(w));
      if (!diff) continue;
      const std::size_t e = w * Bitset::word_bits + static_cast<std::size_t>(std::countr_zero(diff));
      return static_cast<int>(x[e]) <=> static_cast<int>(y[e]);
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const { return plus_.hash() * 31 + minus_.hash(); }

private:
  std::size_t n_ = 0;
  Bitset plus_;
  Bitset minus_;
};

namespace detail {
inline void require_same_length(const SignVector& x, const SignVector& y, const char* op) {
  if (x.size() != y.size())
    throw UsageError(std::string(op) + ": sign vectors of length " + std::to_string(x.size()) + " and " +
                     std::to_string(y.size()));
}
}  // namespace detail

// (X∘Y)_e = X_e if X_e != 0, else Y_e.
inline SignVector compose(const SignVector& x, const SignVector& y) {
  detail::require_same_length(x, y, "compose");
  const Bitset free = x.zeros();
  return SignVector::from_masks(x.plus_mask() | (y.plus_mask() & free), x.minus_mask() | (y.minus_mask() & free));
}

inline SignVector negate(const SignVector& x) { return SignVector::from_masks(x.minus_mask(), x.plus_mask()); }

// Coordinates where x and y carry opposite nonzero signs.
inline IndexSet separator(const SignVector& x, const SignVector& y) {
  detail::require_same_length(x, y, "separator");
  return (x.plus_mask() & y.minus_mask()) | (x.minus_mask() & y.plus_mask());
}

// x <= y iff x∘y == y, i.e. y agrees with x on the support of x.
inline bool leq(const SignVector& x, const SignVector& y) {
  detail::require_same_length(x, y, "leq");
  return x.plus_mask().is_subset_of(y.plus_mask()) && x.minus_mask().is_subset_of(y.minus_mask());
}

struct SignVectorHash {
  std::size_t operator()(const SignVector& x) const { return x.hash(); }
};

}  // namespace salcom
