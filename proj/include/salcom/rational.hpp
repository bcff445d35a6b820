#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "salcom/errors.hpp"

namespace salcom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

namespace detail {
inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
inline BigInt parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}
}  // namespace detail

// Accepts "p" or "p/q" with integer p, q (q != 0); result is canonical.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_integer_literal(text)) throw UsageError("malformed rational '" + std::string(text) + "'");
    return Rational(detail::parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
    throw UsageError("malformed rational '" + std::string(text) + "'");
  const BigInt d = detail::parse_integer(den);
  if (d == 0) throw UsageError("malformed rational '" + std::string(text) + "' (zero denominator)");
  return Rational(detail::parse_integer(num), d);
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

inline int sign_of(const Rational& r) { return r.sign(); }

}  // namespace salcom
