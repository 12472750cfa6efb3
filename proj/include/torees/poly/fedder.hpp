#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torees/poly/groebner.hpp"

namespace torees {

using PrimePolynomial = MultiPolynomial<PrimeField>;

/// Generators g^q of the bracket power I^[q].
template <class Field>
std::vector<MultiPolynomial<Field>> frobenius_power(const std::vector<MultiPolynomial<Field>>& ideal, unsigned long q) {
  if (ideal.empty()) return {};
  unsigned long p = ideal.front().field().characteristic();
  if (p == 0) throw InvalidInput("bracket powers need positive characteristic");
  unsigned long r = q;
  while (r > 1 && r % p == 0) r /= p;
  if (q == 0 || r != 1) throw InvalidInput("q = " + std::to_string(q) + " is not a power of " + std::to_string(p));
  std::vector<MultiPolynomial<Field>> out;
  for (const auto& g : ideal) out.push_back(g.pow(q));
  return out;
}

/// Generators x_i^q of m^[q] for the homogeneous maximal ideal.
template <class Field>
std::vector<MultiPolynomial<Field>> maximal_bracket(const Field& field, std::size_t nvars, unsigned long q) {
  std::vector<MultiPolynomial<Field>> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back(MultiPolynomial<Field>::variable(field, nvars, i).pow(q));
  return out;
}

/// Membership in the monomial ideal m^[p]: every term has an exponent >= p.
template <class Field>
bool in_maximal_bracket(const MultiPolynomial<Field>& f, unsigned long p) {
  for (const auto& [m, c] : f.terms()) {
    bool hit = false;
    for (auto e : m)
      if (static_cast<unsigned long>(e) >= p) hit = true;
    if (!hit) return false;
  }
  return true;
}

/// Terms of f outside m^[p].
template <class Field>
MultiPolynomial<Field> drop_maximal_bracket(const MultiPolynomial<Field>& f, unsigned long p) {
  MultiPolynomial<Field> r(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    bool hit = false;
    for (auto e : m)
      if (static_cast<unsigned long>(e) >= p) hit = true;
    if (!hit) r.add_term(m, c);
  }
  return r;
}

struct FrobeniusVerdict {
  unsigned long p = 0;
  bool f_pure = false;
  std::string method;  // "hypersurface" or "colon"
  /// hypersurface: a monomial of f^(p-1) with every exponent below p.
  std::optional<Monomial> certificate_monomial;
  std::optional<PrimeField::Element> certificate_coefficient;
  /// colon, F-pure: an element of (J^[p] : J) outside m^[p].
  std::optional<PrimePolynomial> certificate_element;
  /// colon, not F-pure: generators of an ideal containing (J^[p] : J) that lie in m^[p].
  std::vector<PrimePolynomial> colon_generators;
  /// Elements g of J whose quotients (J^[p] : g) were intersected.
  std::vector<PrimePolynomial> colon_factors;
};

inline void require_in_maximal_ideal(const PrimePolynomial& f) {
  if (!f.field().is_zero(f.coefficient(Monomial(f.nvars(), 0))))
    throw InvalidInput("polynomial must vanish at the origin");
}

/// f^(p-1) modulo m^[p], multiplying factor by factor and discarding terms
/// that already lie in m^[p].
inline PrimePolynomial truncated_power(const PrimePolynomial& f, unsigned long p) {
  PrimePolynomial acc = PrimePolynomial::constant(f.field(), f.nvars(), f.field().one());
  PrimePolynomial g = drop_maximal_bracket(f, p);
  for (unsigned long i = 0; i + 1 < p; ++i) acc = drop_maximal_bracket(acc * g, p);
  return acc;
}

/// Hypersurface test: K[x]/(f) is F-pure at the origin iff f^(p-1) is not in m^[p].
/// The certificate is the largest surviving monomial in graded reverse lex.
inline FrobeniusVerdict fedder_hypersurface(const PrimePolynomial& f, unsigned long p) {
  if (!is_prime_number(p)) throw InvalidInput("characteristic must be prime");
  if (f.field().characteristic() != p) throw InvalidInput("polynomial is not over F_" + std::to_string(p));
  require_in_maximal_ideal(f);
  FrobeniusVerdict v;
  v.p = p;
  v.method = "hypersurface";
  PrimePolynomial rest = truncated_power(f, p);
  if (rest.is_zero()) return v;
  auto [m, c] = rest.leading_term(MonomialOrder::grevlex());
  v.f_pure = true;
  v.certificate_monomial = m;
  v.certificate_coefficient = c;
  return v;
}

/// Independent re-check: expands f^(p-1) in full and confirms the certificate.
inline bool recheck_hypersurface(const PrimePolynomial& f, const FrobeniusVerdict& v) {
  if (!v.f_pure) return in_maximal_bracket(f.pow(v.p - 1), v.p);
  if (!v.certificate_monomial) return false;
  for (auto e : *v.certificate_monomial)
    if (static_cast<unsigned long>(e) >= v.p) return false;
  auto c = f.pow(v.p - 1).coefficient(*v.certificate_monomial);
  return !f.field().is_zero(c) && (!v.certificate_coefficient || *v.certificate_coefficient == c);
}

/// General test: K[x]/J is F-pure at the origin iff (J^[p] : J) is not in m^[p].
/// The colon is the intersection of the quotients (J^[p] : g); since every
/// partial intersection contains the colon, the loop stops as soon as one lies
/// in m^[p].
inline FrobeniusVerdict fedder_general(const std::vector<PrimePolynomial>& ideal, unsigned long p,
                                       const std::vector<long>& weights = {}) {
  if (!is_prime_number(p)) throw InvalidInput("characteristic must be prime");
  if (ideal.empty()) throw InvalidInput("ideal needs at least one generator");
  const std::size_t n = ideal.front().nvars();
  for (const auto& g : ideal) {
    if (g.field().characteristic() != p) throw InvalidInput("polynomial is not over F_" + std::to_string(p));
    require_in_maximal_ideal(g);
  }
  auto w = resolve_weights(weights, n);
  MonomialOrder order = MonomialOrder::grevlex(w);
  auto bracket = groebner_basis(frobenius_power(ideal, p), order);
  FrobeniusVerdict v;
  v.p = p;
  v.method = "colon";
  std::optional<std::vector<PrimePolynomial>> acc;
  auto inside = [&](const std::vector<PrimePolynomial>& gens) {
    for (const auto& h : gens)
      if (!in_maximal_bracket(h, p)) return false;
    return true;
  };
  for (const auto& g : groebner_basis(ideal, order)) {
    auto q = quotient(bracket, g, n, w);
    acc = acc ? groebner_basis(intersect(*acc, q, n, w), order) : q;
    v.colon_factors.push_back(g);
    if (inside(*acc)) {
      v.colon_generators = *acc;
      return v;
    }
  }
  for (const auto& h : *acc) {
    if (!in_maximal_bracket(h, p)) {
      v.f_pure = true;
      v.certificate_element = h;
      break;
    }
  }
  v.colon_generators = *acc;
  return v;
}

/// Re-checks a colon verdict by normal forms against J^[p]: every reported
/// generator h satisfies h g ∈ J^[p] for the factors g it was computed from,
/// the F-pure certificate satisfies h J ⊆ J^[p], and the m^[p] claims hold.
inline bool recheck_general(const std::vector<PrimePolynomial>& ideal, const FrobeniusVerdict& v,
                            const std::vector<long>& weights = {}) {
  if (ideal.empty()) return false;
  const std::size_t n = ideal.front().nvars();
  MonomialOrder order = MonomialOrder::grevlex(resolve_weights(weights, n));
  auto bracket = groebner_basis(frobenius_power(ideal, v.p), order);
  auto in_colon = [&](const PrimePolynomial& h, const std::vector<PrimePolynomial>& by) {
    for (const auto& g : by)
      if (!normal_form(h * g, bracket, order).is_zero()) return false;
    return true;
  };
  if (v.f_pure) {
    return v.certificate_element && in_colon(*v.certificate_element, ideal) &&
           !in_maximal_bracket(*v.certificate_element, v.p);
  }
  if (v.colon_generators.empty()) return false;
  for (const auto& h : v.colon_generators)
    if (!in_colon(h, v.colon_factors) || !in_maximal_bracket(h, v.p)) return false;
  return true;
}

}  // namespace torees
