#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "torees/poly/polynomial.hpp"

namespace torees {

namespace detail {

/// Dense-ordered polynomial used inside Buchberger: terms sorted strictly
/// descending under the working order.
template <class Field>
struct SortedPoly {
  using Element = typename Field::Element;
  std::vector<Monomial> mons;
  std::vector<Element> coeffs;

  bool empty() const { return mons.empty(); }
  std::size_t size() const { return mons.size(); }
};

inline std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

template <class Field>
SortedPoly<Field> to_sorted(const MultiPolynomial<Field>& p, const MonomialOrder& order) {
  std::vector<std::pair<Monomial, typename Field::Element>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  SortedPoly<Field> s;
  for (auto& [m, c] : terms) {
    s.mons.push_back(std::move(m));
    s.coeffs.push_back(std::move(c));
  }
  return s;
}

template <class Field>
MultiPolynomial<Field> from_sorted(const SortedPoly<Field>& s, const Field& field, std::size_t nvars) {
  MultiPolynomial<Field> p(field, nvars);
  for (std::size_t i = 0; i < s.size(); ++i) p.add_term(s.mons[i], s.coeffs[i]);
  return p;
}

/// a - c * mono * b, merged under the order; `from` skips the first terms of a.
template <class Field>
SortedPoly<Field> sub_multiple(const Field& field, const MonomialOrder& order, const SortedPoly<Field>& a,
                               std::size_t from, const typename Field::Element& c, const Monomial& mono,
                               const SortedPoly<Field>& b, std::size_t b_from) {
  SortedPoly<Field> r;
  r.mons.reserve(a.size() - from + b.size());
  r.coeffs.reserve(a.size() - from + b.size());
  std::size_t i = from, j = b_from;
  Monomial bm;
  bool have_bm = false;
  auto load = [&]() {
    if (j < b.size()) {
      bm = monomial_product(b.mons[j], mono);
      have_bm = true;
    } else {
      have_bm = false;
    }
  };
  load();
  while (i < a.size() || have_bm) {
    int cmp = i >= a.size() ? -1 : !have_bm ? 1 : order.compare(a.mons[i], bm);
    if (cmp > 0) {
      r.mons.push_back(a.mons[i]);
      r.coeffs.push_back(a.coeffs[i]);
      ++i;
    } else if (cmp < 0) {
      r.mons.push_back(std::move(bm));
      r.coeffs.push_back(field.neg(field.mul(c, b.coeffs[j])));
      ++j;
      load();
    } else {
      auto v = field.sub(a.coeffs[i], field.mul(c, b.coeffs[j]));
      if (!field.is_zero(v)) {
        r.mons.push_back(a.mons[i]);
        r.coeffs.push_back(std::move(v));
      }
      ++i;
      ++j;
      load();
    }
  }
  return r;
}

template <class Field>
void make_monic(const Field& field, SortedPoly<Field>& p) {
  if (p.empty() || field.is_one(p.coeffs[0])) return;
  auto inv = field.inv(p.coeffs[0]);
  for (auto& c : p.coeffs) c = field.mul(c, inv);
}

/// Basis under construction with divisor lookup by leading monomial.
template <class Field>
struct ReducerSet {
  std::vector<SortedPoly<Field>> polys;
  std::vector<std::uint64_t> masks;
  std::vector<bool> active;

  std::optional<std::size_t> find_divisor(const Monomial& m, std::optional<std::size_t> skip = std::nullopt) const {
    std::uint64_t mm = support_mask(m);
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (!active[k] || (skip && *skip == k)) continue;
      if ((masks[k] & ~mm) != 0) continue;
      if (divides(polys[k].mons[0], m)) return k;
    }
    return std::nullopt;
  }
};

/// Full reduction of p by the active members of `set`.
template <class Field>
SortedPoly<Field> full_reduce(const Field& field, const MonomialOrder& order, SortedPoly<Field> p,
                              const ReducerSet<Field>& set, std::optional<std::size_t> skip = std::nullopt) {
  SortedPoly<Field> done;
  std::size_t pos = 0;
  while (pos < p.size()) {
    auto k = set.find_divisor(p.mons[pos], skip);
    if (!k) {
      done.mons.push_back(p.mons[pos]);
      done.coeffs.push_back(p.coeffs[pos]);
      ++pos;
      continue;
    }
    const auto& g = set.polys[*k];
    auto c = field.mul(p.coeffs[pos], field.inv(g.coeffs[0]));
    Monomial q = monomial_quotient(p.mons[pos], g.mons[0]);
    p = sub_multiple(field, order, p, pos + 1, c, q, g, 1);
    pos = 0;
  }
  return done;
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace detail

/// Reduced Groebner basis, sorted by ascending leading monomial, every element monic.
template <class Field>
std::vector<MultiPolynomial<Field>> groebner_basis(const std::vector<MultiPolynomial<Field>>& generators,
                                                   const MonomialOrder& order) {
  using detail::CriticalPair;
  if (generators.empty()) return {};
  const Field field = generators.front().field();
  const std::size_t n = generators.front().nvars();
  detail::ReducerSet<Field> set;
  std::vector<CriticalPair> pairs;

  auto add = [&](detail::SortedPoly<Field> h) {
    detail::make_monic(field, h);
    const std::size_t hi = set.polys.size();
    const Monomial& hm = h.mons[0];
    // Gebauer-Moeller update
    std::vector<CriticalPair> fresh;
    for (std::size_t g = 0; g < hi; ++g)
      if (set.active[g]) fresh.push_back({g, hi, monomial_lcm(set.polys[g].mons[0], hm)});
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (coprime(set.polys[fresh[a].i].mons[0], hm)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (divides(fresh[b].lcm, fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<CriticalPair> next;
    for (auto& p : pairs) {
      const Monomial& li = set.polys[p.i].mons[0];
      const Monomial& lj = set.polys[p.j].mons[0];
      bool drop = divides(hm, p.lcm) && monomial_lcm(li, hm) != p.lcm && monomial_lcm(lj, hm) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a] && !coprime(set.polys[fresh[a].i].mons[0], hm)) next.push_back(std::move(fresh[a]));
    pairs = std::move(next);
    for (std::size_t g = 0; g < hi; ++g)
      if (set.active[g] && divides(hm, set.polys[g].mons[0])) set.active[g] = false;
    set.masks.push_back(detail::support_mask(hm));
    set.polys.push_back(std::move(h));
    set.active.push_back(true);
  };

  // Seed with inputs in increasing leading-monomial order, each reduced by the earlier ones.
  std::vector<detail::SortedPoly<Field>> seeds;
  for (const auto& g : generators) {
    if (g.nvars() != n) throw InvalidInput("generators live in different polynomial rings");
    if (!g.is_zero()) seeds.push_back(detail::to_sorted(g, order));
  }
  std::sort(seeds.begin(), seeds.end(), [&](const auto& a, const auto& b) { return order.greater(b.mons[0], a.mons[0]); });
  for (auto& s : seeds) {
    auto r = detail::full_reduce(field, order, std::move(s), set);
    if (!r.empty()) add(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (order.greater(pairs[best].lcm, pairs[k].lcm)) best = k;
    CriticalPair p = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    const auto& f = set.polys[p.i];
    const auto& g = set.polys[p.j];
    // S(f, g) with both monic
    detail::SortedPoly<Field> s;
    Monomial mf = monomial_quotient(p.lcm, f.mons[0]);
    for (std::size_t t = 1; t < f.size(); ++t) {
      s.mons.push_back(monomial_product(f.mons[t], mf));
      s.coeffs.push_back(f.coeffs[t]);
    }
    s = detail::sub_multiple(field, order, s, 0, field.one(), monomial_quotient(p.lcm, g.mons[0]), g, 1);
    auto r = detail::full_reduce(field, order, std::move(s), set);
    if (!r.empty()) add(std::move(r));
  }

  // Interreduce the minimal basis.
  std::vector<std::size_t> alive;
  for (std::size_t k = 0; k < set.polys.size(); ++k)
    if (set.active[k]) alive.push_back(k);
  std::vector<MultiPolynomial<Field>> out;
  std::vector<std::pair<Monomial, MultiPolynomial<Field>>> sorted;
  for (std::size_t k : alive) {
    auto head = set.polys[k].mons[0];
    detail::SortedPoly<Field> tail;
    tail.mons.assign(set.polys[k].mons.begin() + 1, set.polys[k].mons.end());
    tail.coeffs.assign(set.polys[k].coeffs.begin() + 1, set.polys[k].coeffs.end());
    auto reduced_tail = detail::full_reduce(field, order, std::move(tail), set);
    auto poly = detail::from_sorted(reduced_tail, field, n);
    poly.add_term(head, field.one());
    sorted.emplace_back(head, std::move(poly));
  }
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return order.greater(b.first, a.first); });
  for (auto& [m, p] : sorted) out.push_back(std::move(p));
  return out;
}

/// Remainder of f on division by a Groebner basis.
template <class Field>
MultiPolynomial<Field> normal_form(const MultiPolynomial<Field>& f, const std::vector<MultiPolynomial<Field>>& basis,
                                   const MonomialOrder& order) {
  if (f.is_zero()) return f;
  detail::ReducerSet<Field> set;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    set.polys.push_back(detail::to_sorted(g, order));
    set.masks.push_back(detail::support_mask(set.polys.back().mons[0]));
    set.active.push_back(true);
  }
  auto r = detail::full_reduce(f.field(), order, detail::to_sorted(f, order), set);
  return detail::from_sorted(r, f.field(), f.nvars());
}

/// Generators plus a lazily attached Groebner basis under a fixed order.
template <class Field>
struct PolyIdeal {
  std::size_t nvars = 0;
  std::vector<MultiPolynomial<Field>> generators;
  MonomialOrder order = MonomialOrder::grevlex();
  std::optional<std::vector<MultiPolynomial<Field>>> basis;

  const std::vector<MultiPolynomial<Field>>& groebner() {
    if (!basis) basis = groebner_basis(generators, order);
    return *basis;
  }

  bool contains(const MultiPolynomial<Field>& f) { return normal_form(f, groebner(), order).is_zero(); }

  /// The cached basis and the generators reduce each other to zero.
  bool basis_certified() {
    const auto& g = groebner();
    for (const auto& f : generators)
      if (!normal_form(f, g, order).is_zero()) return false;
    auto gens_basis = groebner_basis(generators, order);
    for (const auto& b : g)
      if (!normal_form(b, gens_basis, order).is_zero()) return false;
    return true;
  }
};

/// Quotient of an exact division f / g; throws when g does not divide f.
template <class Field>
MultiPolynomial<Field> exact_divide(const MultiPolynomial<Field>& f, const MultiPolynomial<Field>& g,
                                    const MonomialOrder& order) {
  if (g.is_zero()) throw InvalidInput("division by the zero polynomial");
  const Field& field = f.field();
  auto gs = detail::to_sorted(g, order);
  auto rest = detail::to_sorted(f, order);
  auto inv = field.inv(gs.coeffs[0]);
  MultiPolynomial<Field> q(field, f.nvars());
  while (!rest.empty()) {
    if (!divides(gs.mons[0], rest.mons[0])) throw InvalidInput("polynomial division is not exact");
    auto c = field.mul(rest.coeffs[0], inv);
    Monomial m = monomial_quotient(rest.mons[0], gs.mons[0]);
    q.add_term(m, c);
    rest = detail::sub_multiple(field, order, rest, 1, c, m, gs, 1);
  }
  return q;
}

/// Elements of a Groebner basis under an elimination order that avoid the
/// first `count` variables, with those variables dropped.
template <class Field>
std::vector<MultiPolynomial<Field>> eliminate_front(const std::vector<MultiPolynomial<Field>>& generators,
                                                    std::size_t count, const std::vector<long>& weights) {
  MonomialOrder order = MonomialOrder::grevlex(weights);
  order.elimination_block = count;
  std::vector<MultiPolynomial<Field>> out;
  for (const auto& g : groebner_basis(generators, order))
    if (!g.involves_front(count)) out.push_back(g.without_front_variables(count));
  return out;
}

inline std::vector<long> resolve_weights(const std::vector<long>& weights, std::size_t n) {
  if (weights.empty()) return std::vector<long>(n, 1);
  if (weights.size() != n) throw InvalidInput("one weight per variable required");
  for (long w : weights)
    if (w <= 0) throw InvalidInput("variable weights must be positive");
  return weights;
}

template <class Field>
bool all_homogeneous(const std::vector<MultiPolynomial<Field>>& gens, const std::vector<long>& weights) {
  return std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return g.is_homogeneous(weights); });
}

/// I ∩ J = elim_t(t I + (1 - t) J). The auxiliary variable has weight zero so
/// homogeneous inputs stay homogeneous.
template <class Field>
std::vector<MultiPolynomial<Field>> intersect(const std::vector<MultiPolynomial<Field>>& a,
                                              const std::vector<MultiPolynomial<Field>>& b, std::size_t nvars,
                                              const std::vector<long>& weights = {}) {
  if (a.empty() || b.empty()) return {};
  auto w = resolve_weights(weights, nvars);
  const Field field = a.front().field();
  std::vector<long> ext{0};
  ext.insert(ext.end(), w.begin(), w.end());
  auto t = MultiPolynomial<Field>::variable(field, nvars + 1, 0);
  auto one = MultiPolynomial<Field>::constant(field, nvars + 1, field.one());
  std::vector<MultiPolynomial<Field>> gens;
  for (const auto& f : a) gens.push_back(t * f.with_front_variables(1));
  for (const auto& g : b) gens.push_back((one - t) * g.with_front_variables(1));
  return eliminate_front(gens, 1, ext);
}

/// I : (g), via (I ∩ (g)) / g.
template <class Field>
std::vector<MultiPolynomial<Field>> quotient(const std::vector<MultiPolynomial<Field>>& ideal,
                                             const MultiPolynomial<Field>& g, std::size_t nvars,
                                             const std::vector<long>& weights = {}) {
  if (g.is_zero()) throw InvalidInput("colon by the zero polynomial");
  auto w = resolve_weights(weights, nvars);
  MonomialOrder order = MonomialOrder::grevlex(w);
  std::vector<MultiPolynomial<Field>> out;
  for (const auto& h : intersect(ideal, {g}, nvars, w)) out.push_back(exact_divide(h, g, order));
  return groebner_basis(out, order);
}

/// I : J as the intersection of I : (g) over the generators g of J.
template <class Field>
std::vector<MultiPolynomial<Field>> colon(const std::vector<MultiPolynomial<Field>>& ideal,
                                          const std::vector<MultiPolynomial<Field>>& by, std::size_t nvars,
                                          const std::vector<long>& weights = {}) {
  std::optional<std::vector<MultiPolynomial<Field>>> acc;
  for (const auto& g : by) {
    if (g.is_zero()) continue;
    auto q = quotient(ideal, g, nvars, weights);
    acc = acc ? intersect(*acc, q, nvars, weights) : q;
  }
  if (!acc) throw InvalidInput("colon by the zero ideal");
  return groebner_basis(*acc, MonomialOrder::grevlex(resolve_weights(weights, nvars)));
}

/// I : x_i^infinity. Homogeneous input uses reverse-lex with x_i last, where
/// x_i divides a basis element exactly when it divides its leading term;
/// otherwise I + (t x_i - 1) is eliminated.
template <class Field>
std::vector<MultiPolynomial<Field>> saturate_by_variable(const std::vector<MultiPolynomial<Field>>& ideal,
                                                         std::size_t var, std::size_t nvars,
                                                         const std::vector<long>& weights = {}) {
  if (ideal.empty()) return {};
  if (var >= nvars) throw InvalidInput("variable index out of range");
  auto w = resolve_weights(weights, nvars);
  const Field field = ideal.front().field();
  if (all_homogeneous(ideal, w)) {
    std::vector<std::size_t> perm, back(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      if (i != var) perm.push_back(i);
    perm.push_back(var);
    for (std::size_t i = 0; i < nvars; ++i) back[perm[i]] = i;
    std::vector<long> pw;
    for (std::size_t i : perm) pw.push_back(w[i]);
    std::vector<MultiPolynomial<Field>> moved;
    for (const auto& g : ideal) moved.push_back(g.permuted(perm));
    std::vector<MultiPolynomial<Field>> out;
    for (const auto& g : groebner_basis(moved, MonomialOrder::grevlex(pw))) {
      Monomial strip(nvars, 0);
      strip[nvars - 1] = g.monomial_content()[nvars - 1];
      out.push_back(g.divided_by_monomial(strip).permuted(back));
    }
    return groebner_basis(out, MonomialOrder::grevlex(w));
  }
  std::vector<long> ext{1};
  ext.insert(ext.end(), w.begin(), w.end());
  std::vector<MultiPolynomial<Field>> gens;
  for (const auto& g : ideal) gens.push_back(g.with_front_variables(1));
  Monomial tx(nvars + 1, 0);
  tx[0] = 1;
  tx[var + 1] = 1;
  auto aux = MultiPolynomial<Field>::term(field, tx, field.one());
  aux.add_term(Monomial(nvars + 1, 0), field.neg(field.one()));
  gens.push_back(aux);
  return groebner_basis(eliminate_front(gens, 1, ext), MonomialOrder::grevlex(w));
}

/// Both lists generate the same ideal.
template <class Field>
bool same_ideal(const std::vector<MultiPolynomial<Field>>& a, const std::vector<MultiPolynomial<Field>>& b,
                const MonomialOrder& order) {
  auto ga = groebner_basis(a, order);
  auto gb = groebner_basis(b, order);
  return ga == gb;
}

}  // namespace torees
