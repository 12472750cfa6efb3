#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "torees/poly/field.hpp"

namespace torees {

using Monomial = std::vector<std::int32_t>;

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

inline Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

inline long weighted_degree(const Monomial& m, const std::vector<long>& weights) {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += (weights.empty() ? 1 : weights[i]) * m[i];
  return d;
}

/// Monomial orders: optional elimination block (total degree in the first
/// `elimination_block` variables compared first), then weighted degree, then
/// lex or reverse lex. Pure lex ignores weights. Weights must be positive
/// outside the elimination block and nonnegative inside it.
struct MonomialOrder {
  enum class Kind { lex, grlex, grevlex };
  Kind kind = Kind::grevlex;
  std::vector<long> weights;  // empty means all ones
  std::size_t elimination_block = 0;

  static MonomialOrder grevlex(std::vector<long> w = {}) { return {Kind::grevlex, std::move(w), 0}; }
  static MonomialOrder grlex(std::vector<long> w = {}) { return {Kind::grlex, std::move(w), 0}; }
  static MonomialOrder lex() { return {Kind::lex, {}, 0}; }

  long weight(std::size_t i) const { return weights.empty() ? 1 : weights[i]; }

  /// a > b
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  int compare(const Monomial& a, const Monomial& b) const {
    if (elimination_block) {
      long da = 0, db = 0;
      for (std::size_t i = 0; i < elimination_block; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    if (kind == Kind::lex) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      da += weight(i) * a[i];
      db += weight(i) * b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    if (kind == Kind::grlex) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = a.size(); i > 0; --i)
      if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
    return 0;
  }
};

/// Sparse polynomial over a field; terms keyed by exponent vector, no zero
/// coefficients stored.
template <class Field>
class MultiPolynomial {
 public:
  using Element = typename Field::Element;
  using TermMap = std::map<Monomial, Element>;

  MultiPolynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static MultiPolynomial constant(Field field, std::size_t nvars, const Element& c) {
    MultiPolynomial p(field, nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static MultiPolynomial term(Field field, const Monomial& m, const Element& c) {
    MultiPolynomial p(field, m.size());
    p.add_term(m, c);
    return p;
  }

  static MultiPolynomial variable(Field field, std::size_t nvars, std::size_t i) {
    Monomial m(nvars, 0);
    m[i] = 1;
    return term(field, m, field.one());
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Element& c) {
    if (m.size() != nvars_) throw InvalidInput("monomial has wrong number of variables");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  friend MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b) {
    MultiPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend MultiPolynomial operator-(const MultiPolynomial& a, const MultiPolynomial& b) {
    MultiPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, a.field_.neg(c));
    return r;
  }

  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    MultiPolynomial r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), a.field_.mul(ca, cb));
    return r;
  }

  MultiPolynomial scaled(const Element& c) const {
    MultiPolynomial r(field_, nvars_);
    for (const auto& [m, x] : terms_) r.add_term(m, field_.mul(x, c));
    return r;
  }

  MultiPolynomial times_monomial(const Monomial& mono) const {
    MultiPolynomial r(field_, nvars_);
    for (const auto& [m, x] : terms_) r.terms_.emplace(monomial_product(m, mono), x);
    return r;
  }

  MultiPolynomial pow(unsigned long e) const {
    MultiPolynomial r = constant(field_, nvars_, field_.one());
    MultiPolynomial b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Leading monomial and coefficient under an order; polynomial must be nonzero.
  std::pair<Monomial, Element> leading_term(const MonomialOrder& order) const {
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return *best;
  }

  MultiPolynomial monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_term(order).second));
  }

  bool is_homogeneous(const std::vector<long>& weights) const {
    if (terms_.empty()) return true;
    long d = weighted_degree(terms_.begin()->first, weights);
    for (const auto& [m, c] : terms_)
      if (weighted_degree(m, weights) != d) return false;
    return true;
  }

  /// Reorders variables: variable i of the result is variable perm[i] of this.
  MultiPolynomial permuted(const std::vector<std::size_t>& perm) const {
    MultiPolynomial r(field_, perm.size());
    for (const auto& [m, c] : terms_) {
      Monomial n(perm.size(), 0);
      for (std::size_t i = 0; i < perm.size(); ++i) n[i] = perm[i] < nvars_ ? m[perm[i]] : 0;
      r.add_term(n, c);
    }
    return r;
  }

  /// Prepends `count` new variables with exponent zero.
  MultiPolynomial with_front_variables(std::size_t count) const {
    MultiPolynomial r(field_, nvars_ + count);
    for (const auto& [m, c] : terms_) {
      Monomial n(count, 0);
      n.insert(n.end(), m.begin(), m.end());
      r.terms_.emplace(std::move(n), c);
    }
    return r;
  }

  /// Drops the first `count` variables; they must not occur.
  MultiPolynomial without_front_variables(std::size_t count) const {
    MultiPolynomial r(field_, nvars_ - count);
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < count; ++i)
        if (m[i]) throw InvalidInput("eliminated variable still occurs");
      r.terms_.emplace(Monomial(m.begin() + static_cast<std::ptrdiff_t>(count), m.end()), c);
    }
    return r;
  }

  bool involves_front(std::size_t count) const {
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < count; ++i)
        if (m[i]) return true;
    return false;
  }

  /// Largest monomial dividing every term.
  Monomial monomial_content() const {
    Monomial g;
    for (const auto& [m, c] : terms_) {
      if (g.empty()) {
        g = m;
      } else {
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
      }
    }
    return g.empty() ? Monomial(nvars_, 0) : g;
  }

  MultiPolynomial divided_by_monomial(const Monomial& mono) const {
    MultiPolynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      if (!divides(mono, m)) throw InvalidInput("monomial does not divide polynomial");
      r.terms_.emplace(monomial_quotient(m, mono), c);
    }
    return r;
  }

  /// Canonical text: terms by descending graded reverse lexicographic order.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Element>> sorted(terms_.begin(), terms_.end());
    MonomialOrder order = MonomialOrder::grevlex();
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      std::string coeff = field_.to_string(c);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff = coeff.substr(1);
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      bool constant = std::all_of(m.begin(), m.end(), [](std::int32_t e) { return e == 0; });
      bool unit = coeff == "1";
      if (!unit || constant) out << coeff;
      bool need_star = !unit;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (need_star) out << '*';
        out << names[i];
        if (m[i] > 1) out << '^' << m[i];
        need_star = true;
      }
    }
    return out.str();
  }

 private:
  Field field_;
  std::size_t nvars_;
  TermMap terms_;
};

using RationalPolynomial = MultiPolynomial<RationalField>;

template <class Field>
MultiPolynomial<Field> to_field(const RationalPolynomial& p, const Field& field) {
  MultiPolynomial<Field> r(field, p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, field.from_rational(c));
  return r;
}

inline std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

}  // namespace torees
