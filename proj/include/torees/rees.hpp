#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torees/divisor.hpp"

namespace torees {

enum class ReesKind { multi_symbolic, ordinary };

/// An N^k-graded semigroup in Z^(d+k): the first d coordinates are exponents
/// in the base ring, the last k are the U_1..U_k (or T) grading coordinates.
struct ReesSemigroup {
  AffineSemigroup base;
  std::size_t k = 0;
  std::vector<MonomialDivisor> divisors;  // empty for ordinary Rees rings
  ReesKind kind = ReesKind::multi_symbolic;
  AffineSemigroup semigroup;

  const std::vector<IntVector>& generators() const { return semigroup.generators(); }

  IntVector multidegree(const IntVector& v) const {
    return IntVector(v.end() - static_cast<std::ptrdiff_t>(k), v.end());
  }
  IntVector base_part(const IntVector& v) const {
    return IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(base.ambient_rank()));
  }
};

inline IntVector embed(const IntVector& u, const IntVector& level) {
  IntVector v = u;
  v.insert(v.end(), level.begin(), level.end());
  return v;
}

/// R_s(I_1, ..., I_k) as the saturated semigroup
/// {(u, n) : n >= 0, <u, n_F> >= sum_i n_i c_{i,F}} in group(S) x Z^k, returned
/// by its Hilbert basis. Rational polyhedral, hence always finitely generated.
inline ReesSemigroup build_multi_symbolic_rees(const AffineSemigroup& a, const std::vector<MonomialDivisor>& divisors) {
  require_normal(a);
  for (const auto& d : divisors) {
    check_length(a, d);
    if (!d.is_effective()) throw InvalidInput("unsupported input: divisor is not effective");
  }
  const std::size_t r = a.rank(), k = divisors.size(), d = a.ambient_rank();
  std::vector<IntVector> ineq;
  for (std::size_t f = 0; f < a.facet_count(); ++f) {
    IntVector row = a.facet_normals()[f];
    for (const auto& div : divisors) row.push_back(-div.coefficients[f]);
    ineq.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) ineq.push_back(unit_vector(r + k, r + i));
  std::vector<IntVector> gens;
  if (r + k > 0) {
    LatticeCone cone = LatticeCone::from_inequalities(ineq, r + k);
    for (const auto& h : hilbert_basis(cone)) {
      IntVector u = a.ambient_point(IntVector(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(r)));
      gens.push_back(embed(u, IntVector(h.begin() + static_cast<std::ptrdiff_t>(r), h.end())));
    }
  }
  return ReesSemigroup{a, k, divisors, ReesKind::multi_symbolic, AffineSemigroup(gens, d + k)};
}

/// A[mT] for the homogeneous maximal ideal m generated by the generators of S.
inline ReesSemigroup ordinary_rees(const AffineSemigroup& a) {
  std::vector<IntVector> gens;
  for (const auto& u : a.generators()) {
    gens.push_back(embed(u, make_vector({0})));
    gens.push_back(embed(u, make_vector({1})));
  }
  return ReesSemigroup{a, 1, {}, ReesKind::ordinary, AffineSemigroup(gens, a.ambient_rank() + 1)};
}

/// Krull (normality) verdict for a Rees semigroup.
inline bool verify_krull_normal(const ReesSemigroup& b) { return b.semigroup.is_normal(); }

/// Minimal generators, as a module over the base ring, of the slice of a
/// Rees-type semigroup at multidegree `n`, computed from the semigroup's own
/// generators: every slice element is a sum of positive-level generators with
/// levels adding to n, plus an element of the base.
inline std::vector<IntVector> slice_generators(const AffineSemigroup& base, const std::vector<IntVector>& generators,
                                               std::size_t k, const IntVector& n) {
  const std::size_t d = base.ambient_rank();
  std::vector<std::pair<IntVector, IntVector>> lifted;  // (u, level) with level != 0
  for (const auto& g : generators) {
    IntVector level(g.begin() + static_cast<std::ptrdiff_t>(d), g.end());
    if (is_zero(level)) continue;
    lifted.emplace_back(IntVector(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(d)), level);
  }
  std::set<IntVector> candidates;
  std::function<void(std::size_t, IntVector, IntVector)> walk = [&](std::size_t start, IntVector left, IntVector acc) {
    if (is_zero(left)) {
      candidates.insert(acc);
      return;
    }
    for (std::size_t i = start; i < lifted.size(); ++i) {
      bool fits = true;
      for (std::size_t j = 0; j < k; ++j)
        if (lifted[i].second[j] > left[j]) fits = false;
      if (fits) walk(i, left - lifted[i].second, acc + lifted[i].first);
    }
  };
  if (n.size() != k) throw InvalidInput("multidegree has wrong length");
  walk(0, n, zero_vector(d));
  std::vector<IntVector> minimal;
  for (const auto& c : candidates) {
    bool redundant = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const IntVector& o) { return o != c && base.contains(c - o); });
    if (!redundant) minimal.push_back(c);
  }
  return minimal;
}

inline std::vector<IntVector> slice_generators(const ReesSemigroup& b, const IntVector& n) {
  return slice_generators(b.base, b.generators(), b.k, n);
}

/// All multidegrees in [0, bound]^k, lexicographic.
inline std::vector<IntVector> multidegrees_up_to(std::size_t k, long bound) {
  std::vector<IntVector> out;
  IntVector n = zero_vector(k);
  for (;;) {
    out.push_back(n);
    std::size_t i = k;
    bool advanced = false;
    while (i > 0 && !advanced) {
      --i;
      if (n[i] < bound) {
        n[i] += 1;
        advanced = true;
      } else {
        n[i] = 0;
      }
    }
    if (!advanced) break;
  }
  return out;
}

struct SliceComparison {
  IntVector multidegree;
  std::vector<IntVector> direct;
  std::vector<IntVector> iterated;
  bool matches = false;
};

struct IteratedCheck {
  bool matches = true;
  MonomialDivisor extended_divisor;  // (I_k B)^{**} on B = R_s(I_1..I_{k-1})
  std::vector<SliceComparison> slices;
};

/// Divisor of (I B)^{**} on a Rees semigroup B over A, from the generators of I:
/// on each facet of B, the least valuation of a generator placed at level zero.
inline MonomialDivisor extend_divisor(const ReesSemigroup& b, const DivisorialIdeal& ideal) {
  const AffineSemigroup& s = b.semigroup;
  IntVector coeffs;
  for (std::size_t f = 0; f < s.facet_count(); ++f) {
    std::optional<Integer> least;
    for (const auto& g : ideal.generators) {
      Integer v = dot(s.facet_normals()[f], s.coordinates(embed(g, zero_vector(b.k))));
      if (!least || v < *least) least = v;
    }
    coeffs.push_back(*least);
  }
  return {coeffs};
}

/// R_s(I_1..I_k) against R_s(~I_k) over B = R_s(I_1..I_{k-1}), slice by slice.
inline IteratedCheck iterated_isomorphism_check(const AffineSemigroup& a, const std::vector<MonomialDivisor>& divisors,
                                                long bound) {
  if (divisors.size() < 2) throw InvalidInput("iterated construction needs at least two divisors");
  const std::size_t k = divisors.size();
  ReesSemigroup direct = build_multi_symbolic_rees(a, divisors);
  ReesSemigroup inner = build_multi_symbolic_rees(a, std::vector<MonomialDivisor>(divisors.begin(), divisors.end() - 1));
  IteratedCheck out;
  out.extended_divisor = extend_divisor(inner, divisorial_ideal(a, divisors.back()));
  ReesSemigroup outer = build_multi_symbolic_rees(inner.semigroup, {out.extended_divisor});
  for (const auto& n : multidegrees_up_to(k, bound)) {
    SliceComparison c;
    c.multidegree = n;
    c.direct = slice_generators(a, direct.generators(), k, n);
    c.iterated = slice_generators(a, outer.generators(), k, n);
    c.matches = c.direct == c.iterated;
    out.matches = out.matches && c.matches;
    out.slices.push_back(std::move(c));
  }
  return out;
}

struct ClassTransfer {
  bool same_invariant_factors = false;
  bool isomorphism = false;
  bool omega_formula = false;
  bool pde = false;
  IntVector invariant_factors_a;
  IntVector invariant_factors_b;
  std::vector<std::optional<std::size_t>> facet_map;  // B facet -> A facet, none for n_i >= 0
  std::vector<long> contraction_heights;              // per B facet
  DivisorClass omega_b;
  DivisorClass expected_omega_b;
};

/// Cl(A) -> Cl(B) realized on facets, the canonical class formula and the
/// PDE condition for the monomial height-one primes of B.
inline ClassTransfer class_group_transfer(const AffineSemigroup& a, const ReesSemigroup& b) {
  require_normal(a);
  const AffineSemigroup& s = b.semigroup;
  require_normal(s);
  ClassTransfer t;
  AbelianGroupPresentation cla = class_group(a), clb = class_group(s);
  t.invariant_factors_a = cla.invariant_factors();
  t.invariant_factors_b = clb.invariant_factors();
  t.same_invariant_factors = t.invariant_factors_a == t.invariant_factors_b;

  const std::size_t r = a.rank(), fa = a.facet_count(), fb = s.facet_count();
  // restriction of each B facet functional to level zero, in A coordinates
  std::vector<IntVector> restricted;
  for (const auto& nb : s.facet_normals()) {
    IntVector phi;
    for (const auto& basis : a.group().basis()) phi.push_back(dot(nb, s.coordinates(embed(basis, zero_vector(b.k)))));
    restricted.push_back(std::move(phi));
  }
  bool well_formed = true;
  std::vector<std::size_t> hits(fa, 0);
  for (std::size_t g = 0; g < fb; ++g) {
    std::optional<std::size_t> match;
    for (std::size_t f = 0; f < fa; ++f)
      if (restricted[g] == a.facet_normals()[f]) match = f;
    if (match) ++hits[*match];
    if (!match && !is_zero(restricted[g])) well_formed = false;
    t.facet_map.push_back(match);
  }
  for (auto h : hits)
    if (h != 1) well_formed = false;

  auto extend = [&](const MonomialDivisor& d) {
    IntVector e = zero_vector(fb);
    for (std::size_t g = 0; g < fb; ++g)
      if (t.facet_map[g]) e[g] = d.coefficients[*t.facet_map[g]];
    return MonomialDivisor{e};
  };

  if (well_formed) {
    // principal divisors of A map to principal divisors of B
    bool well_defined = true;
    for (const auto& basis : a.group().basis())
      if (!class_of(clb, extend(principal_divisor(a, basis))).is_zero()) well_defined = false;
    // surjective: images of A's prime divisors together with B's relations span Z^{fb}
    std::vector<IntVector> spanning;
    for (std::size_t f = 0; f < fa; ++f) spanning.push_back(extend(prime_divisor(a, f)).coefficients);
    for (std::size_t j = 0; j < s.rank(); ++j) {
      IntVector col;
      for (const auto& nb : s.facet_normals()) col.push_back(nb[j]);
      spanning.push_back(std::move(col));
    }
    bool surjective = AbelianGroupPresentation(fb, spanning).is_trivial();
    // a surjection between isomorphic finitely generated abelian groups is injective
    t.isomorphism = well_defined && surjective && t.same_invariant_factors;

    MonomialDivisor sum = canonical_divisor(a);
    for (const auto& d : b.divisors) sum = sum + d;
    t.omega_b = class_of(clb, canonical_divisor(s));
    t.expected_omega_b = class_of(clb, extend(sum));
    t.omega_formula = t.omega_b == t.expected_omega_b;
  }

  // contraction of each facet prime of B to A: its face in cone(A)
  t.pde = true;
  for (std::size_t g = 0; g < fb; ++g) {
    const IntVector& phi = restricted[g];
    std::vector<IntVector> face;
    bool nonnegative = true;
    for (const auto& h : a.hilbert_basis()) {
      Integer v = dot(phi, a.coordinates(h));
      if (v < 0) nonnegative = false;
      if (v == 0) face.push_back(a.coordinates(h));
    }
    long height = static_cast<long>(r) - static_cast<long>(rank_of(face, r));
    t.contraction_heights.push_back(height);
    if (!nonnegative || height > 1) t.pde = false;
  }
  return t;
}

struct DegreeCount {
  long degree = 0;
  long quotient = 0;       // monomials of B/(x_i U^{a_i}) in this degree
  long decomposition = 0;  // monomials of the reflexive products with 0 <= n_i < a_i
};

struct CmDecomposition {
  std::vector<Integer> orders;           // a_i
  std::vector<IntVector> principal;      // x_i with I_i^{(a_i)} = x_i A
  std::vector<IntVector> parameters;     // (x_i, a_i e_i) in B
  std::vector<DegreeCount> counts;
  bool holds = false;
};

/// Degree-by-degree check that B/(x_1U^{a_1}, ..., x_kU^{a_k}) has the same
/// monomial counts as the direct sum of reflexive products with 0 <= n_i < a_i.
/// The grading is the default grading of A with every U_i of weight one.
inline CmDecomposition cm_decomposition_check(const AffineSemigroup& a, const std::vector<MonomialDivisor>& divisors,
                                              long max_degree) {
  require_normal(a);
  AbelianGroupPresentation cl = class_group(a);
  const std::size_t k = divisors.size();
  CmDecomposition out;
  for (const auto& d : divisors) {
    check_length(a, d);
    auto ord = cl.order(d.coefficients);
    if (!ord) throw InfiniteOrderClass("infinite order, criterion inapplicable");
    out.orders.push_back(*ord);
    auto x = principal_generator(a, *ord * d);
    if (!x) throw Error("no principal generator for a finite-order multiple");
    out.principal.push_back(*x);
    IntVector level = zero_vector(k);
    if (k) level[out.principal.size() - 1] = *ord;
    out.parameters.push_back(embed(*x, level));
  }
  ReesSemigroup b = build_multi_symbolic_rees(a, divisors);
  GradingVector ga = default_grading(a);
  GradingVector gb = ga.extended(k, 1);

  std::vector<long> left(static_cast<std::size_t>(max_degree + 1), 0), right(left.size(), 0);
  auto levels = elements_by_degree(b.semigroup, gb, max_degree);
  for (long t = 0; t <= max_degree; ++t)
    for (const auto& e : levels[static_cast<std::size_t>(t)]) {
      bool in_ideal = std::any_of(out.parameters.begin(), out.parameters.end(),
                                  [&](const IntVector& f) { return b.semigroup.contains(e - f); });
      if (!in_ideal) ++left[static_cast<std::size_t>(t)];
    }

  auto base_levels = elements_by_degree(a, ga, max_degree);
  IntVector n = zero_vector(k);
  for (;;) {
    long shift = 0;
    for (const auto& x : n) shift += x.get_si();
    if (shift <= max_degree) {
      DivisorialIdeal m = reflexive_product(a, divisors, to_longs(n));
      std::set<IntVector> seen;
      for (const auto& g : m.generators) {
        long dg = ga.degree(g).get_si();
        for (long t = 0; dg + t + shift <= max_degree; ++t)
          for (const auto& s : base_levels[static_cast<std::size_t>(t)]) seen.insert(g + s);
      }
      for (const auto& u : seen) ++right[static_cast<std::size_t>(ga.degree(u).get_si() + shift)];
    }
    std::size_t i = k;
    bool advanced = false;
    while (i > 0 && !advanced) {
      --i;
      if (n[i] + 1 < out.orders[i]) {
        n[i] += 1;
        advanced = true;
      } else {
        n[i] = 0;
      }
    }
    if (!advanced) break;
  }
  out.holds = true;
  for (long t = 0; t <= max_degree; ++t) {
    out.counts.push_back({t, left[static_cast<std::size_t>(t)], right[static_cast<std::size_t>(t)]});
    if (left[static_cast<std::size_t>(t)] != right[static_cast<std::size_t>(t)]) out.holds = false;
  }
  return out;
}

struct QuasiGorensteinReport {
  MonomialDivisor complement;                 // D_J
  std::vector<IntVector> complement_generators;
  std::size_t rees_generator_count = 0;
  IntVector class_group_of_r;
  DivisorClass canonical_class_of_r;
  bool quasi_gorenstein = false;
};

/// Picks J with [I] + [J] + [omega] = 0, builds R = R_s(I, J) and tests [omega_R] = 0.
inline QuasiGorensteinReport quasi_gorenstein_check(const AffineSemigroup& a, const MonomialDivisor& di) {
  QuasiGorensteinReport rep;
  rep.complement = solve_complement(a, di);
  rep.complement_generators = divisorial_ideal(a, rep.complement).generators;
  ReesSemigroup r = build_multi_symbolic_rees(a, {di, rep.complement});
  rep.rees_generator_count = r.generators().size();
  AbelianGroupPresentation cl = class_group(r.semigroup);
  rep.class_group_of_r = cl.invariant_factors();
  rep.canonical_class_of_r = class_of(cl, canonical_divisor(r.semigroup));
  rep.quasi_gorenstein = rep.canonical_class_of_r.is_zero();
  return rep;
}

/// Summary of a built Rees semigroup.
struct ReesReport {
  std::size_t generator_count = 0;
  std::vector<IntVector> multidegrees;
  bool normal = false;
  std::optional<IntVector> non_normal_witness;
  std::optional<IntVector> class_group;
  std::optional<DivisorClass> canonical_class;
  std::optional<bool> quasi_gorenstein;
  std::optional<bool> pde;
  std::string noetherian = "automatic: the defining cone is rational polyhedral";
};

inline ReesReport rees_report(const ReesSemigroup& b) {
  ReesReport rep;
  rep.generator_count = b.generators().size();
  for (const auto& g : b.generators()) rep.multidegrees.push_back(b.multidegree(g));
  NormalityVerdict nv = is_normal(b.semigroup);
  rep.normal = nv.normal;
  rep.non_normal_witness = nv.witness;
  if (b.kind == ReesKind::ordinary) rep.noetherian = "finitely generated by construction";
  if (rep.normal) {
    AbelianGroupPresentation cl = class_group(b.semigroup);
    rep.class_group = cl.invariant_factors();
    rep.canonical_class = class_of(cl, canonical_divisor(b.semigroup));
    rep.quasi_gorenstein = rep.canonical_class->is_zero();
    if (b.kind == ReesKind::multi_symbolic && b.base.is_normal()) rep.pde = class_group_transfer(b.base, b).pde;
  }
  return rep;
}

}  // namespace torees
