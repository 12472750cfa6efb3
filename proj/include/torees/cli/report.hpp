#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "torees/integer.hpp"
#include "torees/poly/polynomial.hpp"

namespace torees::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "torees.report/1";
inline constexpr const char* tool_version = "0.1.0";

/// Machine integers stay numbers; anything wider is written as a decimal string.
inline Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

/// "Z", "Z/2", "Z + Z/3"; "0" for the trivial group.
inline std::string group_text(const IntVector& invariant_factors) {
  if (invariant_factors.empty()) return "0";
  std::string out;
  for (const auto& d : invariant_factors) {
    if (!out.empty()) out += " + ";
    out += d == 0 ? std::string("Z") : "Z/" + d.get_str();
  }
  return out;
}

/// Monomial text in the given names, e.g. W^3*X; "1" for the empty product.
inline std::string monomial_text(const IntVector& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] != 1) out += "^" + e[i].get_str();
  }
  return out.empty() ? "1" : out;
}

inline Json monomials_json(const std::vector<IntVector>& vs, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(monomial_text(v, names));
  return a;
}

/// Removes timing fields recursively, for comparing reports across runs.
inline Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace torees::cli
