#pragma once

#include <random>
#include <string>
#include <vector>

#include "salcom/salcom.hpp"

namespace salcom::test {

inline SignVector sv(const char* s) { return SignVector::parse(s); }

inline std::vector<SignVector> svs(std::initializer_list<const char*> xs) {
  std::vector<SignVector> out;
  for (auto x : xs) out.push_back(sv(x));
  return out;
}

inline AffineForm form(std::vector<long long> a, long long b) {
  AffineForm f;
  for (auto x : a) f.a.emplace_back(x);
  f.b = b;
  return f;
}

// f1 = v + 1, f2 = v - 1 on the real line.
inline Arrangement two_points() { return Arrangement(1, {form({1}, 1), form({1}, -1)}); }

inline Arrangement two_points_halfline() {
  Region k(1);
  k.add_positive(form({1}, 0));
  return Arrangement(1, {form({1}, 1), form({1}, -1)}, k);
}

inline Arrangement generic_lines() {
  return Arrangement(2, {form({1, 0}, 0), form({0, 1}, 0), form({1, 1}, -1)});
}

inline Arrangement concurrent_lines() {
  return Arrangement(2, {form({1, 0}, 0), form({0, 1}, 0), form({1, 1}, 0)});
}

inline std::string data_path(const std::string& name) { return std::string(SALCOM_DATA_DIR) + "/" + name; }

inline SignVector random_sign_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-1, 1);
  SignVector x(n);
  for (std::size_t e = 0; e < n; ++e) x.set(e, static_cast<Sign>(d(rng)));
  return x;
}

}  // namespace salcom::test
