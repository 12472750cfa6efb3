#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "torees/error.hpp"

namespace torees {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

inline IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

inline IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

inline IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v = zero_vector(n);
  v[i] = 1;
  return v;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVector operator*(const Integer& c, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline IntVector& operator+=(IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return lcm(a, b);
}

inline std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

inline std::vector<long> to_longs(const IntVector& v) {
  std::vector<long> r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw InvalidInput("integer does not fit in a machine word: " + x.get_str());
    r.push_back(x.get_si());
  }
  return r;
}

}  // namespace torees
