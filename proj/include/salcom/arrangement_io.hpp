#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "salcom/arrangement.hpp"
#include "salcom/errors.hpp"

namespace salcom {

// Arrangement files:
//   { "dim": d,
//     "hyperplanes": [ {"a": [...], "b": r}, ... ],
//     "region": [ {"a": [...], "b": r, "rel": ">" | "="}, ... ] }
// Rationals are JSON integers or strings "p" / "p/q". A missing "region"
// means K is the whole space.

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(BigInt(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const UsageError& e) {
      throw UsageError(where + ": " + e.what());
    }
  }
  throw UsageError(where + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

inline AffineForm json_form(const nlohmann::json& j, std::size_t dim, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + ": expected an object");
  if (!j.contains("a") || !j["a"].is_array()) throw UsageError(where + ": missing array \"a\"");
  if (j["a"].size() != dim)
    throw UsageError(where + ".a: has " + std::to_string(j["a"].size()) + " entries, expected " +
                     std::to_string(dim));
  AffineForm f;
  for (std::size_t i = 0; i < dim; ++i)
    f.a.push_back(json_rational(j["a"][i], where + ".a[" + std::to_string(i) + "]"));
  f.b = j.contains("b") ? json_rational(j["b"], where + ".b") : Rational(0);
  return f;
}

inline nlohmann::json rational_json(const Rational& r) {
  const BigInt& num = numerator(r);
  if (denominator(r) == 1 && num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max())
    return nlohmann::json(static_cast<long long>(num));
  return nlohmann::json(r.str());
}

}  // namespace detail

inline Arrangement parse_arrangement(const nlohmann::json& j) {
  using detail::json_form;
  if (!j.is_object()) throw UsageError("arrangement: top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw UsageError("arrangement: missing integer \"dim\"");
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<AffineForm> hs;
  if (j.contains("hyperplanes")) {
    if (!j["hyperplanes"].is_array()) throw UsageError("arrangement: \"hyperplanes\" must be an array");
    for (std::size_t e = 0; e < j["hyperplanes"].size(); ++e)
      hs.push_back(json_form(j["hyperplanes"][e], dim, "hyperplanes[" + std::to_string(e) + "]"));
  }
  Region k(dim);
  if (j.contains("region")) {
    if (!j["region"].is_array()) throw UsageError("arrangement: \"region\" must be an array");
    for (std::size_t i = 0; i < j["region"].size(); ++i) {
      const auto& c = j["region"][i];
      const std::string where = "region[" + std::to_string(i) + "]";
      AffineForm f = json_form(c, dim, where);
      const std::string rel = c.contains("rel") && c["rel"].is_string() ? c["rel"].get<std::string>() : ">";
      if (rel == ">")
        k.add_positive(std::move(f));
      else if (rel == "=")
        k.add_zero(std::move(f));
      else
        throw UsageError(where + ".rel: expected \">\" or \"=\", got \"" + rel + "\"");
    }
  }
  return Arrangement(dim, std::move(hs), std::move(k));
}

inline Arrangement parse_arrangement(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("arrangement: malformed JSON: ") + e.what());
  }
  return parse_arrangement(j);
}

inline Arrangement read_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read arrangement file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_arrangement(ss.str());
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline nlohmann::json to_json(const Arrangement& a) {
  auto form = [](const AffineForm& f) {
    nlohmann::json o;
    o["a"] = nlohmann::json::array();
    for (const auto& x : f.a) o["a"].push_back(detail::rational_json(x));
    o["b"] = detail::rational_json(f.b);
    return o;
  };
  nlohmann::json j;
  j["dim"] = a.dim();
  j["hyperplanes"] = nlohmann::json::array();
  for (const auto& h : a.hyperplanes()) j["hyperplanes"].push_back(form(h));
  if (!a.is_full_space()) {
    j["region"] = nlohmann::json::array();
    for (const auto& c : a.region().constraints()) {
      auto o = form(c.form);
      o["rel"] = c.rel == Relation::positive ? ">" : "=";
      j["region"].push_back(o);
    }
  }
  return j;
}

}  // namespace salcom
