#pragma once

#include <cstdint>
#include <string>

#include "torees/integer.hpp"
#include "torees/semigroup.hpp"

namespace torees {

/// Z/p for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(unsigned long p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (1UL << 31) || !is_prime_number(p)) throw InvalidInput("field characteristic must be a prime below 2^31");
  }

  unsigned long characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + b) % p_); }
  Element sub(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + p_ - b) % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} * b) % p_); }
  Element inv(Element a) const {
    if (a == 0) throw InvalidInput("division by zero in prime field");
    return pow(a, p_ - 2);
  }
  Element pow(Element a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Element>(r);
  }
  Element from_rational(const Rational& q) const {
    Integer num = q.get_num() % Integer(p_), den = q.get_den() % Integer(p_);
    if (num < 0) num += p_;
    if (den == 0) throw InvalidInput("denominator vanishes modulo " + std::to_string(p_));
    return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
  }
  /// Symmetric representative, so -1 prints as -1.
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rational numbers.
class RationalField {
 public:
  using Element = Rational;

  unsigned long characteristic() const { return 0; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw InvalidInput("division by zero");
    return 1 / a;
  }
  Element pow(const Element& a, std::uint64_t e) const {
    Element r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= a;
    return r;
  }
  Element from_rational(const Rational& q) const { return q; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace torees
