#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torees/matrix.hpp"

namespace torees {

/// A sublattice of Z^n given by a basis in Hermite normal form.
class SublatticeBasis {
 public:
  SublatticeBasis() = default;

  /// Lattice spanned by arbitrary (possibly dependent) vectors.
  SublatticeBasis(std::size_t ambient_rank, const std::vector<IntVector>& spanning)
      : ambient_rank_(ambient_rank), basis_(hermite_basis(spanning, ambient_rank)) {
    for (const auto& b : basis_) {
      std::size_t p = 0;
      while (b[p] == 0) ++p;
      pivots_.push_back(p);
    }
  }

  static SublatticeBasis full(std::size_t n) {
    std::vector<IntVector> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
    return SublatticeBasis(n, e);
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  /// Integer coordinates of v in the basis, or nullopt when v is not in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const {
    IntVector rest = v;
    IntVector c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Integer& piv = basis_[i][pivots_[i]];
      if (rest[pivots_[i]] % piv != 0) return std::nullopt;
      c[i] = rest[pivots_[i]] / piv;
      if (c[i] != 0)
        for (std::size_t j = 0; j < ambient_rank_; ++j) rest[j] -= c[i] * basis_[i][j];
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
  }

  /// Rational coordinates of v, or nullopt when v is outside the rational span.
  std::optional<std::vector<Rational>> rational_coordinates(const IntVector& v) const {
    std::vector<Rational> rest(v.begin(), v.end());
    std::vector<Rational> c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      c[i] = rest[pivots_[i]] / Rational(basis_[i][pivots_[i]]);
      if (c[i] != 0)
        for (std::size_t j = 0; j < ambient_rank_; ++j) rest[j] -= c[i] * basis_[i][j];
    }
    for (const auto& x : rest)
      if (x != 0) return std::nullopt;
    return c;
  }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  IntVector point(const IntVector& coords) const {
    IntVector p = zero_vector(ambient_rank_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (coords[i] != 0)
        for (std::size_t j = 0; j < ambient_rank_; ++j) p[j] += coords[i] * basis_[i][j];
    return p;
  }

  friend bool operator==(const SublatticeBasis& a, const SublatticeBasis& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v in Z^cols : M v = 0}; the result is saturated.
inline SublatticeBasis kernel_lattice(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<IntVector> kernel;
  for (std::size_t j = s.rank; j < m.cols(); ++j) kernel.push_back(s.right.column(j));
  return SublatticeBasis(m.cols(), kernel);
}

/// Integer points of the rational span of L.
inline SublatticeBasis saturation(const SublatticeBasis& l) {
  const std::size_t n = l.ambient_rank();
  if (l.rank() == 0) return l;
  SublatticeBasis perp = kernel_lattice(IntegerMatrix::from_rows(l.basis(), n));
  if (perp.rank() == 0) return SublatticeBasis::full(n);
  return kernel_lattice(IntegerMatrix::from_rows(perp.basis(), n));
}

/// Extends a functional given in coordinates of a saturated lattice L to an
/// integer functional on the ambient space that agrees with it on L.
inline IntVector lift_functional(const SublatticeBasis& saturated, const IntVector& coord_functional) {
  const std::size_t n = saturated.ambient_rank(), r = saturated.rank();
  SmithForm s = smith_normal_form(IntegerMatrix::from_rows(saturated.basis(), n));
  // B = U^{-1} [I 0] V^{-1}; want B x = f, so x = V (U f, 0).
  IntVector uf = s.left * coord_functional;
  IntVector padded = zero_vector(n);
  for (std::size_t i = 0; i < r; ++i) {
    if (s.diagonal(i, i) != 1) throw InvalidInput("lift_functional needs a saturated lattice");
    padded[i] = uf[i];
  }
  return s.right * padded;
}

/// Finitely generated abelian group presented as Z^n modulo a sublattice,
/// with an explicit projection onto (+) Z/(d_i).
class AbelianGroupPresentation {
 public:
  AbelianGroupPresentation() = default;

  /// Quotient of Z^n by the lattice spanned by `relations`.
  AbelianGroupPresentation(std::size_t n, const std::vector<IntVector>& relations) : n_(n) {
    IntegerMatrix m = relations.empty() ? IntegerMatrix(n, 0) : IntegerMatrix::from_columns(relations, n);
    SmithForm s = smith_normal_form(m);
    for (std::size_t i = 0; i < n; ++i) {
      Integer d = i < s.rank ? s.diagonal(i, i) : Integer(0);
      if (d == 1) continue;
      factors_.push_back(d);
      projection_rows_.push_back(s.left.row(i));
    }
    // SNF puts the free factors last already; d_i | d_{i+1} among nonzero ones.
  }

  std::size_t source_rank() const { return n_; }
  /// Nonzero entries divide their successors; 0 marks a free factor.
  const IntVector& invariant_factors() const { return factors_; }

  bool is_trivial() const { return factors_.empty(); }
  std::size_t free_rank() const {
    std::size_t r = 0;
    for (const auto& d : factors_)
      if (d == 0) ++r;
    return r;
  }

  /// Canonical coordinates of the class of x: torsion coordinates reduced into [0, d_i).
  IntVector project(const IntVector& x) const {
    IntVector c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      c[i] = dot(projection_rows_[i], x);
      if (factors_[i] != 0) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), c[i].get_mpz_t(), factors_[i].get_mpz_t());
        c[i] = r;
      }
    }
    return c;
  }

  /// Order of the class of x; nullopt for infinite order.
  std::optional<Integer> order(const IntVector& x) const {
    IntVector c = project(x);
    Integer ord = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (factors_[i] == 0) return std::nullopt;
      ord = lcm(ord, factors_[i] / gcd(factors_[i], c[i]));
    }
    return ord;
  }

  /// Exponent of the torsion part (1 when torsion-free).
  Integer torsion_exponent() const {
    Integer e = 1;
    for (const auto& d : factors_)
      if (d != 0) e = lcm(e, d);
    return e;
  }

 private:
  std::size_t n_ = 0;
  IntVector factors_;
  std::vector<IntVector> projection_rows_;
};

}  // namespace torees
