#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "torees/hilbert_basis.hpp"

namespace torees {

/// Rational linear functional weights/denominator on Z^d.
struct GradingVector {
  IntVector weights;
  Integer denominator = 1;

  static GradingVector standard(std::size_t d) { return GradingVector{IntVector(d, Integer(1)), 1}; }

  /// Exact degree; throws when the value is not an integer.
  Integer degree(const IntVector& u) const {
    if (u.size() != weights.size()) throw InvalidInput("grading and vector have different lengths");
    Integer num = dot(weights, u);
    if (num % denominator != 0) throw InvalidInput("grading is not integral on " + to_string(u));
    return num / denominator;
  }

  /// Appends zero weights for extra coordinates.
  GradingVector extended(std::size_t extra, long weight = 0) const {
    GradingVector g = *this;
    for (std::size_t i = 0; i < extra; ++i) g.weights.push_back(Integer(weight) * denominator);
    return g;
  }
};

/// Finitely generated subsemigroup of Z^d with pointed cone. All derived
/// geometry (group lattice, cone in group coordinates, Hilbert basis of the
/// normalization) is computed once at construction and shared by copies.
class AffineSemigroup {
 public:
  AffineSemigroup() : AffineSemigroup({}, 0) {}

  AffineSemigroup(std::vector<IntVector> generators, std::size_t ambient_rank) {
    auto g = std::make_shared<Geometry>();
    g->ambient_rank = ambient_rank;
    for (const auto& v : generators) {
      if (v.size() != ambient_rank) throw InvalidInput("generator has wrong length: " + to_string(v));
      if (is_zero(v)) throw InvalidInput("semigroup generators must be nonzero");
    }
    std::sort(generators.begin(), generators.end());
    if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
      throw InvalidInput("semigroup generators must be distinct");
    g->generators = std::move(generators);
    g->group = SublatticeBasis(ambient_rank, g->generators);
    const std::size_t r = g->group.rank();
    for (const auto& v : g->generators) g->local_generators.push_back(*g->group.coordinates(v));
    if (r > 0) {
      g->cone = LatticeCone::from_generators(g->local_generators, r);
      for (const auto& h : torees::hilbert_basis(g->cone)) g->hilbert_basis.push_back(g->group.point(h));
      std::sort(g->hilbert_basis.begin(), g->hilbert_basis.end());
    } else {
      g->cone.dim = 0;
    }
    g->normal = std::includes(g->generators.begin(), g->generators.end(), g->hilbert_basis.begin(),
                              g->hilbert_basis.end());
    geometry_ = std::move(g);
  }

  std::size_t ambient_rank() const { return geometry_->ambient_rank; }
  const std::vector<IntVector>& generators() const { return geometry_->generators; }
  const SublatticeBasis& group() const { return geometry_->group; }
  std::size_t rank() const { return geometry_->group.rank(); }

  /// Cone in group coordinates; its facet normals are primitive on group(S).
  const LatticeCone& cone() const { return geometry_->cone; }
  std::size_t facet_count() const { return geometry_->cone.facets.size(); }
  const std::vector<IntVector>& facet_normals() const { return geometry_->cone.facets; }

  /// Hilbert basis of cone(S) ∩ group(S), in ambient coordinates.
  const std::vector<IntVector>& hilbert_basis() const { return geometry_->hilbert_basis; }
  bool is_normal() const { return geometry_->normal; }

  std::optional<IntVector> try_coordinates(const IntVector& u) const { return geometry_->group.coordinates(u); }

  IntVector coordinates(const IntVector& u) const {
    auto c = try_coordinates(u);
    if (!c) throw InvalidInput("vector is not in the group of the semigroup: " + to_string(u));
    return *c;
  }

  IntVector ambient_point(const IntVector& coords) const { return geometry_->group.point(coords); }

  /// Facet valuations <u, n_F> of a group element, in facet order.
  IntVector valuations(const IntVector& u) const {
    IntVector c = coordinates(u);
    IntVector v;
    for (const auto& f : facet_normals()) v.push_back(dot(f, c));
    return v;
  }

  bool in_group(const IntVector& u) const { return try_coordinates(u).has_value(); }

  /// u ∈ cone(S) ∩ group(S), the normalization of S.
  bool in_normalization(const IntVector& u) const {
    auto c = try_coordinates(u);
    return c && geometry_->cone.contains(*c);
  }

  /// Membership in S itself. For non-normal S this is a depth-bounded search
  /// over generator combinations; the cone functional bounds the depth.
  bool contains(const IntVector& u) const {
    auto c = try_coordinates(u);
    if (!c || !geometry_->cone.contains(*c)) return false;
    if (is_normal()) return true;
    std::map<IntVector, bool> memo;
    return contains_local(*c, memo);
  }

 private:
  struct Geometry {
    std::size_t ambient_rank = 0;
    std::vector<IntVector> generators;
    std::vector<IntVector> local_generators;
    SublatticeBasis group;
    LatticeCone cone;
    std::vector<IntVector> hilbert_basis;
    bool normal = true;
  };

  bool contains_local(const IntVector& c, std::map<IntVector, bool>& memo) const {
    if (is_zero(c)) return true;
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    bool found = false;
    for (const auto& g : geometry_->local_generators) {
      IntVector rest = c - g;
      if (!geometry_->cone.contains(rest)) continue;
      if (contains_local(rest, memo)) {
        found = true;
        break;
      }
    }
    memo.emplace(c, found);
    return found;
  }

  std::shared_ptr<const Geometry> geometry_;
};

inline bool is_prime_number(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// K[S] over a field of characteristic 0 or p.
struct SemigroupRing {
  AffineSemigroup semigroup;
  unsigned long characteristic = 0;

  SemigroupRing(AffineSemigroup s, unsigned long p) : semigroup(std::move(s)), characteristic(p) {
    if (p != 0 && !is_prime_number(p)) throw InvalidInput("characteristic must be 0 or a prime");
  }
};

/// Total exponent degree when it is positive on every generator; otherwise
/// the sum of the facet normals pulled back to the ambient space.
inline GradingVector default_grading(const AffineSemigroup& s) {
  GradingVector g = GradingVector::standard(s.ambient_rank());
  bool positive = true;
  for (const auto& v : s.generators())
    if (g.degree(v) <= 0) positive = false;
  if (positive) return g;
  // functional on group coordinates -> rational functional on the ambient span
  SublatticeBasis sat = saturation(s.group());
  IntVector f = s.cone().positive_functional();
  // express f on saturated coordinates: group basis b_i = sum_j m_ij sat_j
  std::vector<IntVector> m;
  for (const auto& b : s.group().basis()) m.push_back(*sat.coordinates(b));
  IntegerMatrix mm = IntegerMatrix::from_rows(m, sat.rank());
  // solve mm * y = f over Q, then scale
  auto y = solve_rational(mm, f);
  if (!y) throw InvalidInput("cannot build a default grading");
  Integer den = 1;
  for (const auto& q : *y) den = lcm(den, q.get_den());
  IntVector yi(y->size());
  for (std::size_t i = 0; i < y->size(); ++i) yi[i] = Rational((*y)[i] * den).get_num();
  return GradingVector{lift_functional(sat, yi), den};
}

struct NormalityVerdict {
  bool normal = true;
  std::optional<IntVector> witness;  // element of (cone ∩ group) \ S
};

/// Normality of S; on failure the witness is the non-member of cone ∩ group
/// of least default degree, ties broken lexicographically.
inline NormalityVerdict is_normal(const AffineSemigroup& s) {
  if (s.is_normal()) return {true, std::nullopt};
  GradingVector g = default_grading(s);
  std::optional<std::pair<Integer, IntVector>> best;
  for (const auto& h : s.hilbert_basis()) {
    if (s.contains(h)) continue;
    std::pair<Integer, IntVector> key{g.degree(h), h};
    if (!best || key < *best) best = key;
  }
  return {false, best->second};
}

inline void require_positive(const AffineSemigroup& s, const GradingVector& g) {
  for (const auto& v : s.generators())
    if (g.degree(v) < 1) throw InvalidInput("grading is not positive on generator " + to_string(v));
}

/// Elements of S grouped by degree 0..max_degree (ambient coordinates).
inline std::vector<std::set<IntVector>> elements_by_degree(const AffineSemigroup& s, const GradingVector& g,
                                                           long max_degree) {
  require_positive(s, g);
  std::vector<std::set<IntVector>> levels(static_cast<std::size_t>(std::max(0L, max_degree + 1)));
  if (max_degree < 0) return levels;
  levels[0].insert(zero_vector(s.ambient_rank()));
  std::vector<std::pair<long, const IntVector*>> gens;
  for (const auto& v : s.generators()) gens.emplace_back(g.degree(v).get_si(), &v);
  for (long t = 1; t <= max_degree; ++t)
    for (const auto& [d, v] : gens) {
      if (d > t) continue;
      for (const auto& x : levels[static_cast<std::size_t>(t - d)]) levels[static_cast<std::size_t>(t)].insert(x + *v);
    }
  return levels;
}

struct HilbertFunctionTable {
  long max_degree = 0;
  std::vector<Integer> counts;

  friend bool operator==(const HilbertFunctionTable& a, const HilbertFunctionTable& b) {
    return a.max_degree == b.max_degree && a.counts == b.counts;
  }
};

inline HilbertFunctionTable hilbert_function(const AffineSemigroup& s, const GradingVector& g, long max_degree) {
  HilbertFunctionTable t{max_degree, {}};
  for (const auto& level : elements_by_degree(s, g, max_degree)) t.counts.emplace_back(static_cast<unsigned long>(level.size()));
  return t;
}

namespace detail {

/// Minimal generators of the module {u ∈ group(S) : <u, n_F> >= c_F for all F}
/// over a normal S: the level-one Hilbert basis elements of the cone
/// {(u, t) : <u, n_F> >= c_F t, t >= 0}. Sorted by (degree, lex).
inline std::vector<IntVector> module_generators(const AffineSemigroup& s, const IntVector& coefficients) {
  const std::size_t r = s.rank();
  if (coefficients.size() != s.facet_count()) throw InvalidInput("divisor coefficient vector length mismatch");
  if (r == 0) return {zero_vector(s.ambient_rank())};
  std::vector<IntVector> ineq;
  for (std::size_t f = 0; f < s.facet_count(); ++f) {
    IntVector row = s.facet_normals()[f];
    row.push_back(-coefficients[f]);
    ineq.push_back(std::move(row));
  }
  ineq.push_back(unit_vector(r + 1, r));
  LatticeCone cone = LatticeCone::from_inequalities(ineq, r + 1);
  std::vector<IntVector> gens;
  for (const auto& h : torees::hilbert_basis(cone))
    if (h[r] == 1) gens.push_back(s.ambient_point(IntVector(h.begin(), h.end() - 1)));
  GradingVector g = default_grading(s);
  std::sort(gens.begin(), gens.end(), [&](const IntVector& a, const IntVector& b) {
    Integer da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  return gens;
}

}  // namespace detail

/// a-invariant of K[S] for normal S: minus the least degree of an interior
/// point of cone(S) in group(S).
inline Integer a_invariant_normal(const AffineSemigroup& s, const GradingVector& g) {
  if (!s.is_normal()) throw NonNormalSemigroup("a_invariant_normal needs a normal semigroup");
  require_positive(s, g);
  std::optional<Integer> least;
  for (const auto& u : detail::module_generators(s, IntVector(s.facet_count(), Integer(1)))) {
    Integer d = g.degree(u);
    if (!least || d < *least) least = d;
  }
  return -*least;
}

/// a-invariant of K[x_1..x_n]/(f) for f quasi-homogeneous of degree f_degree.
inline Integer a_invariant_hypersurface(const std::vector<long>& weights, long f_degree) {
  Integer sum = 0;
  for (long w : weights) {
    if (w <= 0) throw InvalidInput("hypersurface weights must be positive");
    sum += w;
  }
  return Integer(f_degree) - sum;
}

/// Minimal generators of {u ∈ S : n | deg(u)}. Every such element is a sum of
/// at most n generators of S (prefix sums mod n repeat), so candidates are
/// enumerated exactly and then reduced.
inline AffineSemigroup veronese_subsemigroup(const AffineSemigroup& s, const GradingVector& g, long n) {
  if (n <= 0) throw InvalidInput("Veronese level must be positive");
  require_positive(s, g);
  const auto& gens = s.generators();
  std::set<IntVector> candidates;
  std::function<void(std::size_t, long, IntVector)> walk = [&](std::size_t start, long left, IntVector acc) {
    if (!is_zero(acc) && g.degree(acc) % n == 0) candidates.insert(acc);
    if (left == 0) return;
    for (std::size_t i = start; i < gens.size(); ++i) walk(i, left - 1, acc + gens[i]);
  };
  walk(0, n, zero_vector(s.ambient_rank()));
  std::vector<IntVector> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end(), [&](const IntVector& a, const IntVector& b) {
    Integer da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<IntVector> minimal;
  for (const auto& c : sorted) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (g.degree(m) < g.degree(c) && s.contains(c - m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(c);
  }
  return AffineSemigroup(minimal, s.ambient_rank());
}

/// {(u, v) : deg1(u) = deg2(v)} in Z^(d1+d2). Both inputs must be normal.
inline AffineSemigroup segre_product(const AffineSemigroup& s1, const GradingVector& g1, const AffineSemigroup& s2,
                                     const GradingVector& g2) {
  require_positive(s1, g1);
  require_positive(s2, g2);
  if (!s1.is_normal() || !s2.is_normal()) throw NonNormalSemigroup("segre_product needs normal factors");
  const std::size_t d1 = s1.ambient_rank(), d2 = s2.ambient_rank();
  std::vector<IntVector> rays;
  for (const auto& a : s1.hilbert_basis())
    for (const auto& b : s2.hilbert_basis()) {
      IntVector v = g2.degree(b) * a;
      IntVector w = g1.degree(a) * b;
      v.insert(v.end(), w.begin(), w.end());
      rays.push_back(primitive(v));
    }
  // lattice: (group1 x group2) ∩ {g1(u) = g2(v)}
  std::vector<IntVector> span;
  for (const auto& b : s1.group().basis()) {
    IntVector v = b;
    v.resize(d1 + d2, Integer(0));
    span.push_back(v);
  }
  for (const auto& b : s2.group().basis()) {
    IntVector v = zero_vector(d1);
    v.insert(v.end(), b.begin(), b.end());
    span.push_back(v);
  }
  // degree functional on the product group, in its own coordinates
  SublatticeBasis product(d1 + d2, span);
  IntVector functional;
  for (const auto& b : product.basis()) {
    IntVector u(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(d1));
    IntVector v(b.begin() + static_cast<std::ptrdiff_t>(d1), b.end());
    functional.push_back(g1.degree(u) - g2.degree(v));
  }
  SublatticeBasis kernel = kernel_lattice(IntegerMatrix::from_rows({functional}, product.rank()));
  std::vector<IntVector> lattice_basis;
  for (const auto& k : kernel.basis()) lattice_basis.push_back(product.point(k));
  SublatticeBasis lattice(d1 + d2, lattice_basis);
  if (rays.empty()) return AffineSemigroup({}, d1 + d2);
  return AffineSemigroup(hilbert_basis(RationalCone{d1 + d2, rays}, lattice), d1 + d2);
}

}  // namespace torees
