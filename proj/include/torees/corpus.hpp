#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "torees/divisor.hpp"

namespace torees::corpus {

/// K[ax, ay, bx, by] inside K[a, b, x, y].
inline AffineSemigroup quadric_cone() {
  return AffineSemigroup({make_vector({1, 0, 1, 0}), make_vector({1, 0, 0, 1}), make_vector({0, 1, 1, 0}),
                          make_vector({0, 1, 0, 1})},
                         4);
}

/// Facet of the prime (ax, ay).
inline std::size_t quadric_p(const AffineSemigroup& a) {
  return facet_of_prime(a, {make_vector({1, 0, 1, 0}), make_vector({1, 0, 0, 1})});
}

/// Facet of the prime (ax, bx).
inline std::size_t quadric_q(const AffineSemigroup& a) {
  return facet_of_prime(a, {make_vector({1, 0, 1, 0}), make_vector({0, 1, 1, 0})});
}

/// Exponent vectors of all monomials of degree `degree` in `vars` variables, lexicographically descending.
inline std::vector<IntVector> monomials_of_degree(std::size_t vars, long degree) {
  std::vector<IntVector> out;
  IntVector cur = zero_vector(vars);
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long left) {
    if (i + 1 == vars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (long e = left; e >= 0; --e) {
      cur[i] = e;
      walk(i + 1, left - e);
    }
  };
  if (vars == 0) return degree == 0 ? std::vector<IntVector>{{}} : out;
  walk(0, degree);
  return out;
}

/// The n-th Veronese subring of K[X_1..X_m].
inline AffineSemigroup veronese(std::size_t m, long n) { return AffineSemigroup(monomials_of_degree(m, n), m); }

/// Facet of P = X_1 K[X] ∩ A in the Veronese ring.
inline std::size_t veronese_p(const AffineSemigroup& a) {
  std::vector<IntVector> gens;
  for (const auto& g : a.generators())
    if (g[0] > 0) gens.push_back(g);
  return facet_of_prime(a, gens);
}

/// K[W^3X, X^3Y, Y^3Z, Z^3W, W^2X^2Y^2Z^2] inside K[W, X, Y, Z], in this order.
inline std::vector<IntVector> cyclic_monomials() {
  return {make_vector({3, 1, 0, 0}), make_vector({0, 3, 1, 0}), make_vector({0, 0, 3, 1}), make_vector({1, 0, 0, 3}),
          make_vector({2, 2, 2, 2})};
}

inline AffineSemigroup cyclic_ring() { return AffineSemigroup(cyclic_monomials(), 4); }

/// Polynomial ring K[x_1..x_d] as the semigroup N^d.
inline AffineSemigroup polynomial_ring(std::size_t d) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(unit_vector(d, i));
  return AffineSemigroup(gens, d);
}

}  // namespace torees::corpus
