#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "torees/semigroup.hpp"

namespace torees {

/// Integer coefficient per facet of cone(S), in facet order.
struct MonomialDivisor {
  IntVector coefficients;

  bool is_effective() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Integer& c) { return c >= 0; });
  }
  friend bool operator==(const MonomialDivisor&, const MonomialDivisor&) = default;
  friend MonomialDivisor operator+(const MonomialDivisor& a, const MonomialDivisor& b) {
    return {a.coefficients + b.coefficients};
  }
  friend MonomialDivisor operator*(const Integer& n, const MonomialDivisor& d) { return {n * d.coefficients}; }
};

/// The reflexive monomial ideal {u : <u, n_F> >= c_F} with its minimal generators.
struct DivisorialIdeal {
  MonomialDivisor divisor;
  std::vector<IntVector> generators;  // sorted by (default degree, lex)

  bool is_unit() const { return generators.size() == 1 && is_zero(generators.front()); }
};

/// Class in Cl(A), canonical coordinates of the class-group presentation.
struct DivisorClass {
  IntVector coordinates;

  bool is_zero() const { return torees::is_zero(coordinates); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline void require_normal(const AffineSemigroup& a) {
  if (!a.is_normal()) throw NonNormalSemigroup("divisor theory needs a normal semigroup ring");
}

inline void check_length(const AffineSemigroup& a, const MonomialDivisor& d) {
  if (d.coefficients.size() != a.facet_count()) throw InvalidInput("divisor coefficient vector length mismatch");
}

inline MonomialDivisor zero_divisor(const AffineSemigroup& a) { return {zero_vector(a.facet_count())}; }

/// Divisor of the height-one prime of facet f.
inline MonomialDivisor prime_divisor(const AffineSemigroup& a, std::size_t facet) {
  if (facet >= a.facet_count()) throw InvalidInput("facet index out of range");
  return {unit_vector(a.facet_count(), facet)};
}

/// Divisor of the principal ideal generated by the monomial u ∈ group(S).
inline MonomialDivisor principal_divisor(const AffineSemigroup& a, const IntVector& u) { return {a.valuations(u)}; }

/// Monomials of the prime P_F = {u ∈ S : <u, n_F> > 0}: its minimal generators
/// are the Hilbert basis elements with positive valuation.
inline std::vector<IntVector> prime_generators(const AffineSemigroup& a, std::size_t facet) {
  std::vector<IntVector> gens;
  for (const auto& h : a.hilbert_basis())
    if (a.valuations(h)[facet] > 0) gens.push_back(h);
  return gens;
}

/// Locates the facet whose height-one prime is generated by `monomials`;
/// throws when the monomials generate no monomial height-one prime.
inline std::size_t facet_of_prime(const AffineSemigroup& a, const std::vector<IntVector>& monomials) {
  require_normal(a);
  for (std::size_t f = 0; f < a.facet_count(); ++f) {
    bool inside = std::all_of(monomials.begin(), monomials.end(),
                              [&](const IntVector& m) { return a.contains(m) && a.valuations(m)[f] > 0; });
    if (!inside) continue;
    bool generates = true;
    for (const auto& h : prime_generators(a, f)) {
      bool covered = std::any_of(monomials.begin(), monomials.end(), [&](const IntVector& m) { return a.contains(h - m); });
      if (!covered) {
        generates = false;
        break;
      }
    }
    if (generates) return f;
  }
  throw InvalidInput("monomials do not generate a height-one monomial prime");
}

inline DivisorialIdeal divisorial_ideal(const AffineSemigroup& a, const MonomialDivisor& d) {
  require_normal(a);
  check_length(a, d);
  return {d, detail::module_generators(a, d.coefficients)};
}

/// Membership of a monomial in the divisorial ideal of d.
inline bool in_divisorial_ideal(const AffineSemigroup& a, const MonomialDivisor& d, const IntVector& u) {
  auto c = a.try_coordinates(u);
  if (!c) return false;
  for (std::size_t f = 0; f < a.facet_count(); ++f)
    if (dot(a.facet_normals()[f], *c) < d.coefficients[f]) return false;
  return true;
}

/// I^(n), the reflexive hull of I^n.
inline DivisorialIdeal symbolic_power(const AffineSemigroup& a, const MonomialDivisor& d, long n) {
  if (n < 0) throw InvalidInput("symbolic power exponent must be nonnegative");
  return divisorial_ideal(a, Integer(n) * d);
}

inline MonomialDivisor combine(const AffineSemigroup& a, const std::vector<MonomialDivisor>& divisors,
                               const std::vector<long>& exponents) {
  if (divisors.size() != exponents.size()) throw InvalidInput("one exponent per divisor required");
  MonomialDivisor sum = zero_divisor(a);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    check_length(a, divisors[i]);
    sum = sum + Integer(exponents[i]) * divisors[i];
  }
  return sum;
}

/// (I_1^{n_1} ... I_k^{n_k})^{**}.
inline DivisorialIdeal reflexive_product(const AffineSemigroup& a, const std::vector<MonomialDivisor>& divisors,
                                         const std::vector<long>& exponents) {
  return divisorial_ideal(a, combine(a, divisors, exponents));
}

/// Cl(A) = Z^{facets} / image of the valuation map on group(S).
inline AbelianGroupPresentation class_group(const AffineSemigroup& a) {
  require_normal(a);
  std::vector<IntVector> relations;
  for (std::size_t j = 0; j < a.rank(); ++j) {
    IntVector col;
    for (const auto& f : a.facet_normals()) col.push_back(f[j]);
    relations.push_back(std::move(col));
  }
  return AbelianGroupPresentation(a.facet_count(), relations);
}

inline DivisorClass class_of(const AbelianGroupPresentation& cl, const MonomialDivisor& d) {
  if (d.coefficients.size() != cl.source_rank()) throw InvalidInput("divisor coefficient vector length mismatch");
  return {cl.project(d.coefficients)};
}

inline DivisorClass class_of(const AffineSemigroup& a, const MonomialDivisor& d) {
  check_length(a, d);
  return class_of(class_group(a), d);
}

/// Canonical module as the ideal of interior monomials: coefficient 1 on every facet.
inline MonomialDivisor canonical_divisor(const AffineSemigroup& a) {
  require_normal(a);
  return {IntVector(a.facet_count(), Integer(1))};
}

/// Monomial x with <x, n_F> = c_F on every facet, when the divisor is principal.
inline std::optional<IntVector> principal_generator(const AffineSemigroup& a, const MonomialDivisor& d) {
  check_length(a, d);
  const std::size_t r = a.rank();
  if (r == 0) return is_zero(d.coefficients) ? std::optional<IntVector>(zero_vector(a.ambient_rank())) : std::nullopt;
  IntegerMatrix m = IntegerMatrix::from_rows(a.facet_normals(), r);
  SmithForm s = smith_normal_form(m);
  // m c = d  <=>  D (V^{-1} c) = U d
  IntVector ud = s.left * d.coefficients;
  IntVector y = zero_vector(r);
  for (std::size_t i = 0; i < ud.size(); ++i) {
    Integer di = s.invariant(i);
    if (i < r && di != 0) {
      if (ud[i] % di != 0) return std::nullopt;
      y[i] = ud[i] / di;
    } else if (ud[i] != 0) {
      return std::nullopt;
    }
  }
  return a.ambient_point(s.right * y);
}

/// Effective D_J with [D_I] + [D_J] + [omega] = 0: the lexicographically least
/// coefficient vector in the box [0, e + max|c_I|]^{facets}, where e is the
/// exponent of the torsion part of Cl(A).
inline MonomialDivisor solve_complement(const AffineSemigroup& a, const MonomialDivisor& di) {
  require_normal(a);
  check_length(a, di);
  AbelianGroupPresentation cl = class_group(a);
  IntVector target = cl.project(Integer(-1) * (di.coefficients + canonical_divisor(a).coefficients));
  Integer bound = cl.torsion_exponent();
  Integer extra = 0;
  for (const auto& c : di.coefficients) extra = std::max(extra, Integer(abs(c)));
  bound += extra;
  const std::size_t n = a.facet_count();
  IntVector candidate = zero_vector(n);
  for (;;) {
    if (cl.project(candidate) == target) return {candidate};
    bool advanced = false;
    for (std::size_t i = n; i > 0 && !advanced; --i) {
      if (candidate[i - 1] < bound) {
        candidate[i - 1] += 1;
        advanced = true;
      } else {
        candidate[i - 1] = 0;
      }
    }
    if (!advanced) break;
  }
  // Outside the box: v(x) - 1 - c_I is effective for an interior x with large valuations.
  IntVector x = zero_vector(a.ambient_rank());
  for (const auto& h : a.hilbert_basis()) x += h;
  Integer scale = 1;
  for (;;) {
    IntVector v = a.valuations(scale * x);
    MonomialDivisor dj{v - IntVector(n, Integer(1)) - di.coefficients};
    if (dj.is_effective()) return dj;
    scale *= 2;
  }
}

}  // namespace torees
