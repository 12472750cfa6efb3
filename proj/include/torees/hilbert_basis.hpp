#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "torees/cone.hpp"

namespace torees {

namespace detail {

/// Normal of the hyperplane through r-1 independent vectors, oriented so that
/// `inside` pairs positively.
inline IntVector oriented_normal(const std::vector<IntVector>& face, const IntVector& inside, std::size_t dim) {
  SublatticeBasis k = kernel_lattice(IntegerMatrix::from_rows(face, dim));
  IntVector n = k.basis().front();
  if (dot(n, inside) < 0) n = Integer(-1) * n;
  return n;
}

}  // namespace detail

/// Placing triangulation of a full-dimensional pointed cone using only its
/// extreme rays. Each simplex is a sorted list of indices into `rays`.
inline std::vector<std::vector<std::size_t>> triangulate(const std::vector<IntVector>& rays, std::size_t dim) {
  std::vector<std::size_t> first;
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < rays.size() && first.size() < dim; ++i) {
    basis.push_back(rays[i]);
    if (rank_of(basis, dim) == basis.size())
      first.push_back(i);
    else
      basis.pop_back();
  }
  if (first.size() < dim) throw InvalidInput("cannot triangulate a cone that is not full-dimensional");

  std::vector<std::vector<std::size_t>> simplices{first};
  // boundary facet (sorted ray indices) -> normal pointing into the union
  std::map<std::vector<std::size_t>, IntVector> boundary;
  auto add_simplex_facets = [&](const std::vector<std::size_t>& s) {
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      std::vector<std::size_t> face;
      std::vector<IntVector> vecs;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != omit) {
          face.push_back(s[t]);
          vecs.push_back(rays[s[t]]);
        }
      auto it = boundary.find(face);
      if (it != boundary.end()) {
        boundary.erase(it);
      } else {
        boundary.emplace(face, detail::oriented_normal(vecs, rays[s[omit]], dim));
      }
    }
  };
  add_simplex_facets(first);

  std::set<std::size_t> used(first.begin(), first.end());
  for (std::size_t v = 0; v < rays.size(); ++v) {
    if (used.count(v)) continue;
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [face, normal] : boundary)
      if (dot(normal, rays[v]) < 0) {
        std::vector<std::size_t> s = face;
        s.push_back(v);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    for (const auto& s : added) {
      add_simplex_facets(s);
      simplices.push_back(s);
    }
    used.insert(v);
  }
  return simplices;
}

/// Lattice points of the half-open fundamental parallelepiped of the
/// simplicial cone spanned by `gens` (columns), including the origin.
inline std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& gens, std::size_t dim) {
  IntegerMatrix v = IntegerMatrix::from_columns(gens, dim);
  Integer det = abs(determinant(v));
  IntegerMatrix adj = adjugate(v, determinant(v));
  Integer signed_det = determinant(v);
  SmithForm s = smith_normal_form(v);
  IntegerMatrix u_inv = unimodular_inverse(s.left);

  std::vector<IntVector> points;
  IntVector e = zero_vector(dim);
  for (;;) {
    IntVector x = u_inv * e;
    // lambda = adj * x / det; keep fractional parts
    IntVector num = adj * x;
    IntVector p = zero_vector(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      Integer r;
      Integer ni = signed_det < 0 ? Integer(-num[i]) : num[i];
      mpz_fdiv_r(r.get_mpz_t(), ni.get_mpz_t(), det.get_mpz_t());
      if (r != 0)
        for (std::size_t j = 0; j < dim; ++j) p[j] += r * gens[i][j];
    }
    for (auto& c : p) c /= det;
    points.push_back(std::move(p));

    std::size_t i = 0;
    for (; i < dim; ++i) {
      e[i] += 1;
      if (e[i] < s.diagonal(i, i)) break;
      e[i] = 0;
    }
    if (i == dim) break;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

/// Hilbert basis of C ∩ Z^dim for a full-dimensional pointed cone, sorted
/// lexicographically.
inline std::vector<IntVector> hilbert_basis(const LatticeCone& cone) {
  const std::size_t dim = cone.dim;
  if (dim == 0) return {};
  std::set<IntVector> candidates(cone.rays.begin(), cone.rays.end());
  for (const auto& simplex : triangulate(cone.rays, dim)) {
    std::vector<IntVector> gens;
    for (auto i : simplex) gens.push_back(cone.rays[i]);
    for (auto& p : parallelepiped_points(gens, dim))
      if (!is_zero(p)) candidates.insert(std::move(p));
  }

  IntVector grading = cone.positive_functional();
  std::vector<std::pair<Integer, IntVector>> by_degree;
  for (const auto& c : candidates) by_degree.emplace_back(dot(grading, c), c);
  std::sort(by_degree.begin(), by_degree.end());

  std::vector<IntVector> basis;
  for (const auto& [deg, x] : by_degree) {
    bool reducible = false;
    for (const auto& h : basis)
      if (cone.contains(x - h)) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

/// Hilbert basis of the semigroup C ∩ L. C must be pointed and L must be a
/// lattice of full rank in the span of C. Output is sorted lexicographically.
inline std::vector<IntVector> hilbert_basis(const RationalCone& c, const SublatticeBasis& l) {
  const std::size_t n = c.ambient_rank;
  if (l.ambient_rank() != n) throw InvalidInput("lattice and cone live in different ambient spaces");
  std::vector<IntVector> local;
  for (const auto& g : c.ray_generators) {
    auto q = l.rational_coordinates(g);
    if (!q) throw InvalidInput("cone generator outside the span of the lattice");
    Integer den = 1;
    for (const auto& x : *q) den = lcm(den, x.get_den());
    IntVector v(q->size());
    for (std::size_t i = 0; i < q->size(); ++i) v[i] = Rational((*q)[i] * den).get_num();
    if (!is_zero(v)) local.push_back(primitive(v));
  }
  if (rank_of(local, l.rank()) < l.rank()) throw InvalidInput("lattice is not of full rank in the span of the cone");
  LatticeCone cone = LatticeCone::from_generators(local, l.rank());
  if (rank_of(cone.facets, l.rank()) < l.rank()) throw NotPointedCone();
  std::vector<IntVector> out;
  for (const auto& h : hilbert_basis(cone)) out.push_back(l.point(h));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace torees
