#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "torees/lattice.hpp"

namespace torees {

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void resize(std::size_t n) { words_.resize((n + 63) / 64, 0); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// Extreme rays of the cone {y in R^dim : <a, y> >= 0 for every row a} by
/// incremental double description. The rows must have rank `dim` (pointed
/// cone); otherwise NotPointedCone is thrown. Rays are primitive and sorted
/// lexicographically.
inline std::vector<IntVector> double_description(const std::vector<IntVector>& inequalities, std::size_t dim) {
  if (dim == 0) return {};
  std::vector<IntVector> rows;
  for (const auto& a : inequalities)
    if (!is_zero(a)) rows.push_back(primitive(a));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  // initial simplicial cone from the first independent rows
  std::vector<std::size_t> chosen;
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < dim; ++i) {
    basis.push_back(rows[i]);
    if (rank_of(basis, dim) == basis.size())
      chosen.push_back(i);
    else
      basis.pop_back();
  }
  if (chosen.size() < dim) throw NotPointedCone();

  struct Ray {
    IntVector v;
    detail::Bitset zero;
  };
  std::vector<Ray> rays;
  IntegerMatrix a = IntegerMatrix::from_rows(basis, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto x = solve_rational(a, unit_vector(dim, j));
    Integer den = 1;
    for (const auto& q : *x) den = lcm(den, q.get_den());
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational((*x)[i] * den).get_num();
    Ray r{primitive(v), detail::Bitset(rows.size())};
    for (std::size_t i = 0; i < dim; ++i)
      if (i != j) r.zero.set(chosen[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(rows.size(), false);
  for (auto c : chosen) processed[c] = true;

  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (processed[k]) continue;
    processed[k] = true;
    const IntVector& row = rows[k];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(row, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zero.set(k);
      continue;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      Ray r = rays[i];
      if (val[i] == 0) r.zero.set(k);
      next.push_back(std::move(r));
    }
    for (auto p : pos)
      for (auto q : neg) {
        detail::Bitset common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && common.subset_of(rays[t].zero)) adjacent = false;
        if (!adjacent) continue;
        IntVector w = val[p] * rays[q].v - val[q] * rays[p].v;
        Ray r{primitive(w), common};
        r.zero.set(k);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// A full-dimensional pointed cone in Z^dim described both ways. The lattice
/// is Z^dim itself; callers change coordinates before building one.
struct LatticeCone {
  std::size_t dim = 0;
  std::vector<IntVector> facets;  // primitive inward normals, sorted
  std::vector<IntVector> rays;    // primitive extreme ray generators, sorted

  static LatticeCone from_generators(const std::vector<IntVector>& generators, std::size_t dim) {
    LatticeCone c;
    c.dim = dim;
    if (rank_of(generators, dim) < dim) throw InvalidInput("cone is not full-dimensional");
    c.facets = double_description(generators, dim);
    c.rays = double_description(c.facets, dim);
    return c;
  }

  static LatticeCone from_inequalities(const std::vector<IntVector>& inequalities, std::size_t dim) {
    LatticeCone c;
    c.dim = dim;
    c.rays = double_description(inequalities, dim);
    if (rank_of(c.rays, dim) < dim) throw InvalidInput("cone is not full-dimensional");
    c.facets = double_description(c.rays, dim);
    return c;
  }

  bool contains(const IntVector& x) const {
    for (const auto& f : facets)
      if (dot(f, x) < 0) return false;
    return true;
  }

  bool in_interior(const IntVector& x) const {
    for (const auto& f : facets)
      if (dot(f, x) <= 0) return false;
    return true;
  }

  /// Sum of the facet normals; strictly positive on nonzero points of the cone.
  IntVector positive_functional() const {
    IntVector g = zero_vector(dim);
    for (const auto& f : facets) g += f;
    return g;
  }
};

/// A rational polyhedral cone in Z^n given by generators.
struct RationalCone {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> ray_generators;
};

/// Primitive inward facet normals of C, sorted lexicographically. A cone that
/// is not full-dimensional is handled inside the saturated lattice of its
/// span; the normals returned are integer functionals on Z^n that restrict
/// to primitive normals there. Throws NotPointedCone when C contains a line.
inline std::vector<IntVector> facets(const RationalCone& c) {
  const std::size_t n = c.ambient_rank;
  SublatticeBasis span = saturation(SublatticeBasis(n, c.ray_generators));
  const std::size_t r = span.rank();
  if (r == 0) return {};
  std::vector<IntVector> coords;
  for (const auto& g : c.ray_generators) coords.push_back(*span.coordinates(g));
  std::vector<IntVector> local = double_description(coords, r);
  if (rank_of(local, r) < r) throw NotPointedCone();
  if (r == n && span == SublatticeBasis::full(n)) return local;
  std::vector<IntVector> out;
  for (const auto& f : local) out.push_back(lift_functional(span, f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace torees
