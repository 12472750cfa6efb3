#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "torees/lattice.hpp"
#include "torees/poly/groebner.hpp"
#include "torees/semigroup.hpp"

namespace torees {

/// Positive integer weights w_j = deg(a_j) making the toric ideal homogeneous,
/// when the images generate a pointed semigroup without zero.
inline std::optional<std::vector<long>> toric_weights(const std::vector<IntVector>& images, std::size_t ambient) {
  std::vector<IntVector> distinct;
  for (const auto& a : images) {
    if (is_zero(a)) return std::nullopt;
    if (std::find(distinct.begin(), distinct.end(), a) == distinct.end()) distinct.push_back(a);
  }
  try {
    AffineSemigroup s(distinct, ambient);
    GradingVector g = default_grading(s);
    std::vector<long> w;
    for (const auto& a : images) {
      Integer d = dot(g.weights, a);
      if (d <= 0 || !d.fits_slong_p()) return std::nullopt;
      w.push_back(d.get_si());
    }
    Integer c = 0;
    for (long x : w) c = gcd(c, Integer(x));
    for (long& x : w) x = Integer(x / c).get_si();
    return w;
  } catch (const NotPointedCone&) {
    return std::nullopt;
  }
}

/// Ideal of the monomial map U_j -> x^{a_j} over `field`: the lattice ideal of
/// the kernel lattice saturated by every variable, repeated until stable.
template <class Field>
PolyIdeal<Field> toric_ideal(const std::vector<IntVector>& images, std::size_t ambient, const Field& field) {
  const std::size_t n = images.size();
  for (const auto& a : images)
    if (a.size() != ambient) throw InvalidInput("monomial image has wrong length");
  auto weights = toric_weights(images, ambient);
  PolyIdeal<Field> ideal;
  ideal.nvars = n;
  ideal.order = MonomialOrder::grevlex(weights ? *weights : std::vector<long>{});
  if (n == 0) return ideal;
  IntegerMatrix m = ambient == 0 ? IntegerMatrix(0, n) : IntegerMatrix::from_columns(images, ambient);
  SublatticeBasis kernel = kernel_lattice(m);
  std::vector<MultiPolynomial<Field>> gens;
  for (const auto& v : kernel.basis()) {
    Monomial plus(n, 0), minus(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!v[j].fits_sint_p()) throw InvalidInput("kernel entry too large for an exponent");
      int e = static_cast<int>(v[j].get_si());
      (e > 0 ? plus : minus)[j] = e > 0 ? e : -e;
    }
    auto b = MultiPolynomial<Field>::term(field, plus, field.one());
    b.add_term(minus, field.neg(field.one()));
    gens.push_back(b);
  }
  std::vector<long> w = weights ? *weights : std::vector<long>(n, 1);
  if (!gens.empty()) {
    gens = groebner_basis(gens, ideal.order);
    for (;;) {
      auto next = gens;
      for (std::size_t j = 0; j < n; ++j) next = saturate_by_variable(next, j, n, w);
      bool stable = groebner_basis(next, ideal.order) == gens;
      gens = groebner_basis(next, ideal.order);
      if (stable) break;
    }
  }
  ideal.generators = gens;
  ideal.basis = gens;
  return ideal;
}

/// Substitutes the monomial map into f; the result is a Laurent polynomial
/// returned as exponent-to-coefficient terms.
template <class Field>
std::map<IntVector, typename Field::Element> substitute_monomials(const MultiPolynomial<Field>& f,
                                                                  const std::vector<IntVector>& images,
                                                                  std::size_t ambient) {
  std::map<IntVector, typename Field::Element> out;
  const Field& field = f.field();
  for (const auto& [m, c] : f.terms()) {
    IntVector e = zero_vector(ambient);
    for (std::size_t j = 0; j < m.size(); ++j) e += Integer(m[j]) * images[j];
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) {
      it->second = field.add(it->second, c);
      if (field.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

}  // namespace torees
