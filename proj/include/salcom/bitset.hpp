#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace salcom {

// Fixed-length, multi-word bitset. Length is chosen at construction.
class Bitset {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + word_bits - 1) / word_bits, 0) {}

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (auto& w : b.words_) w = ~word_type{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return words_.size(); }
  word_type word(std::size_t i) const { return words_[i]; }

  bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
  void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Index of the lowest set bit, or size() if empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return n_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      word_type w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(i * word_bits + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a.subtract(b); }

  Bitset complement() const {
    Bitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() {
    if (n_ % word_bits && !words_.empty()) words_.back() &= (word_type{1} << (n_ % word_bits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<word_type> words_;
};

using IndexSet = Bitset;

}  // namespace salcom
