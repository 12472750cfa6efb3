#pragma once

// Randomized property suites shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "torees/corpus.hpp"
#include "torees/hilbert_basis.hpp"
#include "torees/poly/fedder.hpp"
#include "torees/poly/parser.hpp"
#include "torees/poly/toric_ideal.hpp"
#include "torees/rees.hpp"

namespace props {

using namespace torees;

struct Summary {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

/// U M V = D, U and V unimodular, D diagonal with d_i | d_{i+1}, and
/// d_1 ... d_k = gcd of the k x k minors.
inline Summary smith_form_suite(long count = 200, unsigned seed = 20240601) {
  Summary s;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size(1, 6), entry(-9, 9);
  for (long c = 0; c < count; ++c) {
    ++s.cases;
    std::size_t rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
    std::vector<std::vector<Integer>> raw(rows, std::vector<Integer>(cols));
    std::vector<IntVector> rv;
    for (auto& r : raw) {
      for (auto& x : r) x = entry(rng);
      rv.push_back(r);
    }
    IntegerMatrix m = IntegerMatrix::from_rows(rv, cols);
    SmithForm f = smith_normal_form(m);
    std::string tag = "matrix #" + std::to_string(c);
    if (!(f.left * m * f.right == f.diagonal)) {
      s.fail(tag + ": U M V != D");
      continue;
    }
    if (abs(determinant(f.left)) != 1 || abs(determinant(f.right)) != 1) {
      s.fail(tag + ": transform not unimodular");
      continue;
    }
    bool diag = true;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && f.diagonal(i, j) != 0) diag = false;
    const std::size_t k = std::min(rows, cols);
    for (std::size_t i = 0; i < k; ++i) {
      if (f.invariant(i) < 0) diag = false;
      if (i + 1 < k && f.invariant(i) != 0 && f.invariant(i + 1) % f.invariant(i) != 0) diag = false;
      if (i + 1 < k && f.invariant(i) == 0 && f.invariant(i + 1) != 0) diag = false;
    }
    if (!diag) {
      s.fail(tag + ": D is not in Smith form");
      continue;
    }
    auto dets = oracle::determinantal_divisors(raw);
    Integer prod = 1;
    for (std::size_t i = 0; i < k; ++i) {
      prod *= f.invariant(i);
      if (prod != dets[i]) {
        s.fail(tag + ": minor-gcd law fails at k=" + std::to_string(i + 1));
        break;
      }
    }
  }
  return s;
}

/// Random pointed full-dimensional cones of rank 1..4 with generators of
/// positive coordinate sum.
inline std::vector<std::vector<IntVector>> random_cones(long count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dimd(1, 4), entry(-2, 3);
  std::vector<std::vector<IntVector>> out;
  while (static_cast<long>(out.size()) < count) {
    std::size_t dim = static_cast<std::size_t>(dimd(rng));
    std::size_t ngen = dim + static_cast<std::size_t>(rng() % 3);
    std::vector<IntVector> gens;
    while (gens.size() < ngen) {
      IntVector v(dim);
      Integer sum = 0;
      for (auto& x : v) {
        x = entry(rng);
        sum += x;
      }
      if (sum <= 0) continue;
      gens.push_back(v);
    }
    if (rank_of(gens, dim) != dim) continue;
    out.push_back(gens);
  }
  return out;
}

/// Hilbert basis elements are irreducible, and every lattice point of the cone
/// up to a coordinate-sum bound is a nonnegative combination of them.
inline Summary hilbert_basis_suite(long count = 50, unsigned seed = 7) {
  Summary s;
  long index = 0;
  for (const auto& gens : random_cones(count, seed)) {
    ++s.cases;
    const std::size_t dim = gens.front().size();
    std::string tag = "cone #" + std::to_string(index++);
    LatticeCone cone = LatticeCone::from_generators(gens, dim);
    std::vector<IntVector> hb = hilbert_basis(cone);
    bool ok = true;
    for (const auto& g : gens)
      if (!cone.contains(g)) ok = false;
    for (const auto& h : hb) {
      if (!cone.contains(h) || is_zero(h)) ok = false;
      for (const auto& k : hb)
        if (k != h && cone.contains(h - k)) ok = false;
    }
    if (!ok) {
      s.fail(tag + ": basis not minimal");
      continue;
    }
    // the slice of coordinate sum t lies within t * max|r_i| / min sum(r)
    Integer worst = 0, least_sum = -1;
    for (const auto& r : cone.rays) {
      Integer sum = 0;
      for (const auto& x : r) {
        worst = std::max(worst, Integer(abs(x)));
        sum += x;
      }
      if (least_sum < 0 || sum < least_sum) least_sum = sum;
    }
    long bound = dim <= 2 ? 8 : dim == 3 ? 5 : 3;
    Integer radius_z = (Integer(bound) * worst + least_sum - 1) / least_sum;
    long radius = std::min(radius_z.get_si(), dim <= 2 ? 40L : dim == 3 ? 12L : 6L);
    auto points = oracle::cone_points(cone.facets, dim, radius, bound);
    if (!oracle::all_representable(points, hb)) s.fail(tag + ": lattice point not generated");
  }
  return s;
}

/// Membership criterion for I^(n) against the localization oracle on the
/// quadric cone and the second Veronese of K[X1, X2], n = 1..3.
inline Summary symbolic_power_suite() {
  Summary s;
  struct Ring {
    std::string name;
    AffineSemigroup a;
    std::vector<MonomialDivisor> divisors;
    long degree_bound;
  };
  AffineSemigroup q = corpus::quadric_cone();
  AffineSemigroup v = corpus::veronese(2, 2);
  MonomialDivisor qp = prime_divisor(q, corpus::quadric_p(q)), qq = prime_divisor(q, corpus::quadric_q(q));
  MonomialDivisor vp = prime_divisor(v, corpus::veronese_p(v));
  std::vector<Ring> rings{{"quadric-cone", q, {qp, qq, qp + qq}, 4}, {"veronese(2,2)", v, {vp, Integer(2) * vp}, 4}};
  for (const auto& r : rings) {
    GradingVector g = default_grading(r.a);
    auto levels = elements_by_degree(r.a, g, r.degree_bound);
    for (std::size_t di = 0; di < r.divisors.size(); ++di)
      for (long n = 1; n <= 3; ++n) {
        ++s.cases;
        DivisorialIdeal ideal = symbolic_power(r.a, r.divisors[di], n);
        for (const auto& level : levels)
          for (const auto& u : level) {
            bool crit = in_divisorial_ideal(r.a, Integer(n) * r.divisors[di], u);
            bool by_gens = std::any_of(ideal.generators.begin(), ideal.generators.end(),
                                       [&](const IntVector& h) { return r.a.contains(u - h); });
            bool brute = oracle::in_symbolic_power_oracle(r.a, r.divisors[di], n, u);
            if (crit != brute || by_gens != brute)
              s.fail(r.name + " divisor #" + std::to_string(di) + " n=" + std::to_string(n) + " at " + to_string(u));
          }
      }
  }
  return s;
}

/// Fedder verdicts do not depend on the order of the variables, nor on
/// rescaling generators by units.
inline Summary fedder_permutation_suite(unsigned seed = 11) {
  Summary s;
  std::mt19937 rng(seed);
  auto check = [&](const std::string& name, const std::vector<PrimePolynomial>& ideal, std::vector<long> weights,
                   unsigned long p, int perms) {
    const std::size_t n = ideal.front().nvars();
    if (weights.empty()) weights.assign(n, 1);
    bool base = ideal.size() == 1 ? fedder_hypersurface(ideal[0], p).f_pure : fedder_general(ideal, p, weights).f_pure;
    for (int t = 0; t < perms; ++t) {
      ++s.cases;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<PrimePolynomial> moved;
      PrimeField field(p);
      auto unit = static_cast<PrimeField::Element>(1 + static_cast<unsigned long>(t) % (p - 1));
      for (const auto& g : ideal) moved.push_back(g.permuted(perm).scaled(unit));
      std::vector<long> w;
      for (auto i : perm) w.push_back(weights[i]);
      bool hyp = moved.size() == 1 ? fedder_hypersurface(moved[0], p).f_pure : base;
      bool gen = fedder_general(moved, p, w).f_pure;
      if (hyp != base || gen != base) s.fail(name + ": verdict changed under permutation " + std::to_string(t));
    }
  };
  PrimeField f2(2), f3(3), f5(5), f7(7);
  {
    auto ideal = toric_ideal(corpus::cyclic_monomials(), 4, f2);
    check("cyclic ring p=2", ideal.generators, ideal.order.weights, 2, 4);
  }
  {
    std::vector<IntVector> images;
    for (long level = 0; level <= 1; ++level)
      for (const auto& g : corpus::cyclic_monomials()) images.push_back(embed(g, make_vector({level})));
    auto ideal = toric_ideal(images, 5, f2);
    check("cyclic rees p=2", ideal.generators, ideal.order.weights, 2, 2);
  }
  {
    std::vector<std::string> names{"W", "X", "Y", "Z"};
    auto f = to_field(parse_polynomial("W^2 + X^3 + Y^6 + Z^7", names), f7);
    check("W^2+X^3+Y^6+Z^7 p=7", {f}, {21, 14, 7, 6}, 7, 3);
    auto g = to_field(parse_polynomial("W^2 + X^3 + Y^6 + Z^7", names), f5);
    check("W^2+X^3+Y^6+Z^7 p=5", {g}, {21, 14, 7, 6}, 5, 3);
  }
  {
    std::vector<std::string> names{"x", "y", "z"};
    for (const char* text : {"x^3 + y^3 + z^3", "x*y*z", "x^2 + y^3", "x*y - z^2"}) {
      auto f = to_field(parse_polynomial(text, names), f3);
      std::vector<long> w = std::string(text) == "x^2 + y^3" ? std::vector<long>{3, 2, 1} : std::vector<long>{};
      check(std::string(text) + " p=3", {f}, w, 3, 3);
    }
    auto x = PrimePolynomial::variable(f2, 3, 0), y = PrimePolynomial::variable(f2, 3, 1), z = PrimePolynomial::variable(f2, 3, 2);
    check("(xy, yz) p=2", {x * y, y * z}, {}, 2, 3);
    check("(x^2, xy) p=2", {x * x, x * y}, {}, 2, 3);
  }
  return s;
}

}  // namespace props
