#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torees/corpus.hpp"
#include "torees/rees.hpp"

using namespace torees;

namespace {

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Quadric {
  AffineSemigroup a = corpus::quadric_cone();
  MonomialDivisor p = prime_divisor(a, corpus::quadric_p(a));
  MonomialDivisor q = prime_divisor(a, corpus::quadric_q(a));
};

std::vector<MonomialDivisor> copies(const MonomialDivisor& d, long n) { return std::vector<MonomialDivisor>(n, d); }

}  // namespace

TEST(ReesBuild, PrincipalDivisorAddsOneGenerator) {
  AffineSemigroup a = corpus::polynomial_ring(2);
  MonomialDivisor d = principal_divisor(a, make_vector({1, 0}));
  ReesSemigroup b = build_multi_symbolic_rees(a, {d});
  EXPECT_EQ(b.generators(), sorted({make_vector({0, 1, 0}), make_vector({1, 0, 0}), make_vector({1, 0, 1})}));
}

TEST(ReesBuild, QuadricPQIsSegreOfTwoPlanes) {
  Quadric q;
  ReesSemigroup b = build_multi_symbolic_rees(q.a, {q.p, q.q});
  EXPECT_EQ(b.generators().size(), 9u);
  AffineSemigroup p3 = corpus::polynomial_ring(3);
  AffineSemigroup segre = segre_product(p3, GradingVector::standard(3), p3, GradingVector::standard(3));
  GradingVector gb{make_vector({1, 1, 1, 1, 0, 0}), 2};
  GradingVector gs{make_vector({1, 1, 1, 0, 0, 0}), 1};
  for (const auto& g : b.generators()) EXPECT_EQ(gb.degree(g), 1);
  EXPECT_EQ(hilbert_function(b.semigroup, gb, 5), hilbert_function(segre, gs, 5));
  EXPECT_EQ(class_group(b.semigroup).invariant_factors(), class_group(segre).invariant_factors());
}

TEST(ReesBuild, VeroneseAlphaOneCounts) {
  // degree-t slice of the 2nd Veronese of K[X1, X2, X1 U] has C(2t + 2, 2) monomials
  AffineSemigroup v = corpus::veronese(2, 2);
  MonomialDivisor p = prime_divisor(v, corpus::veronese_p(v));
  ReesSemigroup b = build_multi_symbolic_rees(v, {p});
  auto h = hilbert_function(b.semigroup, GradingVector{make_vector({1, 1, 0}), 2}, 8);
  for (long t = 0; t <= 8; ++t) EXPECT_EQ(h.counts[static_cast<std::size_t>(t)], (2 * t + 1) * (t + 1)) << t;
}

TEST(ReesBuild, RejectsNonEffectiveDivisor) {
  Quadric q;
  EXPECT_THROW(build_multi_symbolic_rees(q.a, {Integer(-1) * q.p}), InvalidInput);
}

TEST(Krull, MultiSymbolicOutputsAreNormal) {
  Quadric q;
  AffineSemigroup v = corpus::veronese(2, 3);
  MonomialDivisor vp = prime_divisor(v, corpus::veronese_p(v));
  EXPECT_TRUE(verify_krull_normal(build_multi_symbolic_rees(q.a, {q.p, q.q})));
  EXPECT_TRUE(verify_krull_normal(build_multi_symbolic_rees(q.a, {q.p, q.p, q.q})));
  EXPECT_TRUE(verify_krull_normal(build_multi_symbolic_rees(v, {vp, Integer(2) * vp})));
  EXPECT_TRUE(verify_krull_normal(build_multi_symbolic_rees(q.a, {})));
}

TEST(Krull, OrdinaryReesOfCyclicRingIsNot) {
  EXPECT_FALSE(verify_krull_normal(ordinary_rees(corpus::cyclic_ring())));
}

TEST(Slices, MatchReflexiveProducts) {
  Quadric q;
  std::vector<MonomialDivisor> ds{q.p, q.q};
  ReesSemigroup b = build_multi_symbolic_rees(q.a, ds);
  for (const auto& n : multidegrees_up_to(2, 3))
    EXPECT_EQ(sorted(slice_generators(b, n)), sorted(reflexive_product(q.a, ds, to_longs(n)).generators))
        << to_string(n);
  AffineSemigroup v = corpus::veronese(2, 2);
  MonomialDivisor vp = prime_divisor(v, corpus::veronese_p(v));
  ReesSemigroup bv = build_multi_symbolic_rees(v, {vp});
  for (long n = 0; n <= 4; ++n)
    EXPECT_EQ(sorted(slice_generators(bv, make_vector({n}))), sorted(symbolic_power(v, vp, n).generators));
}

TEST(Iterated, QuadricPQ) {
  Quadric q;
  IteratedCheck c = iterated_isomorphism_check(q.a, {q.p, q.q}, 2);
  EXPECT_TRUE(c.matches);
  EXPECT_EQ(c.slices.size(), 9u);
  for (const auto& s : c.slices) EXPECT_TRUE(s.matches) << to_string(s.multidegree);
}

TEST(Iterated, VeronesePP) {
  AffineSemigroup v = corpus::veronese(2, 2);
  MonomialDivisor p = prime_divisor(v, corpus::veronese_p(v));
  EXPECT_TRUE(iterated_isomorphism_check(v, {p, p}, 2).matches);
}

TEST(Iterated, ZeroSecondDivisor) {
  Quadric q;
  EXPECT_TRUE(iterated_isomorphism_check(q.a, {q.p, zero_divisor(q.a)}, 2).matches);
  EXPECT_THROW(iterated_isomorphism_check(q.a, {q.p}, 2), InvalidInput);
}

TEST(Transfer, QuadricFrontier) {
  Quadric q;
  for (long n = 1; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m) {
      auto ds = copies(q.p, n);
      auto more = copies(q.q, m);
      ds.insert(ds.end(), more.begin(), more.end());
      ReesSemigroup b = build_multi_symbolic_rees(q.a, ds);
      ClassTransfer t = class_group_transfer(q.a, b);
      EXPECT_EQ(t.invariant_factors_b, make_vector({0}));
      EXPECT_TRUE(t.isomorphism);
      EXPECT_TRUE(t.omega_formula);
      EXPECT_TRUE(t.pde);
      EXPECT_EQ(t.omega_b.is_zero(), n == m) << n << "," << m;
      // [omega_B] = i((n - m)[P])
      AbelianGroupPresentation cla = class_group(q.a);
      Integer diff = class_of(cla, Integer(n - m) * q.p).coordinates[0];
      EXPECT_EQ(abs(t.omega_b.coordinates[0]), abs(diff));
    }
}

TEST(Transfer, EmptyDivisorListIsIdentity) {
  Quadric q;
  ReesSemigroup b = build_multi_symbolic_rees(q.a, {});
  ClassTransfer t = class_group_transfer(q.a, b);
  EXPECT_TRUE(t.isomorphism);
  EXPECT_TRUE(t.omega_formula);
  for (std::size_t f = 0; f < t.facet_map.size(); ++f) EXPECT_TRUE(t.facet_map[f].has_value());
}

TEST(Transfer, ClassGroupsAgreeAcrossCorpus) {
  AffineSemigroup v = corpus::veronese(3, 2);
  MonomialDivisor vp = prime_divisor(v, corpus::veronese_p(v));
  Quadric q;
  std::vector<std::pair<AffineSemigroup, std::vector<MonomialDivisor>>> cases{
      {q.a, {q.p}}, {q.a, {q.q, q.p + q.q}}, {v, {vp}}, {v, {vp, vp}}};
  for (const auto& [a, ds] : cases) {
    ReesSemigroup b = build_multi_symbolic_rees(a, ds);
    EXPECT_EQ(class_group(b.semigroup).invariant_factors(), class_group(a).invariant_factors());
  }
}

TEST(CmDecomposition, VeroneseHolds) {
  AffineSemigroup v = corpus::veronese(2, 2);
  MonomialDivisor p = prime_divisor(v, corpus::veronese_p(v));
  CmDecomposition c = cm_decomposition_check(v, {p}, 6);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.orders, std::vector<Integer>{2});
  EXPECT_EQ(c.principal, std::vector<IntVector>{make_vector({2, 0})});
  ASSERT_EQ(c.counts.size(), 7u);
  // independent count of the right-hand side in exponent degree plus U-level:
  // A sits in even degrees t with t + 1 monomials, P U in odd degrees t with
  // the t - 1 monomials of degree t - 1 divisible by X1
  for (const auto& d : c.counts) {
    long t = d.degree;
    EXPECT_EQ(d.decomposition, t % 2 == 0 ? t + 1 : t - 1) << t;
  }
}

TEST(CmDecomposition, PrincipalDivisorGivesHilbertFunction) {
  AffineSemigroup a = corpus::polynomial_ring(2);
  CmDecomposition c = cm_decomposition_check(a, {prime_divisor(a, 0)}, 6);
  EXPECT_TRUE(c.holds);
  auto h = hilbert_function(a, GradingVector::standard(2), 6);
  for (const auto& d : c.counts) EXPECT_EQ(Integer(d.quotient), h.counts[static_cast<std::size_t>(d.degree)]);
}

TEST(CmDecomposition, QuadricIsInapplicable) {
  Quadric q;
  try {
    cm_decomposition_check(q.a, {q.p}, 4);
    FAIL() << "expected InfiniteOrderClass";
  } catch (const InfiniteOrderClass& e) {
    EXPECT_NE(std::string(e.what()).find("infinite order"), std::string::npos);
  }
}

TEST(QuasiGorenstein, QuadricP) {
  Quadric q;
  auto r = quasi_gorenstein_check(q.a, q.p);
  EXPECT_EQ(class_of(q.a, r.complement), class_of(q.a, q.q));
  EXPECT_TRUE(r.quasi_gorenstein);
  // J = Q itself also works
  ReesSemigroup b = build_multi_symbolic_rees(q.a, {q.p, q.q});
  EXPECT_TRUE(class_of(b.semigroup, canonical_divisor(b.semigroup)).is_zero());
}

TEST(QuasiGorenstein, VeroneseP) {
  AffineSemigroup v = corpus::veronese(2, 2);
  MonomialDivisor p = prime_divisor(v, corpus::veronese_p(v));
  auto r = quasi_gorenstein_check(v, p);
  EXPECT_EQ(class_of(v, r.complement), class_of(v, p));
  EXPECT_TRUE(r.quasi_gorenstein);
}

TEST(QuasiGorenstein, PrincipalOnGorenstein) {
  Quadric q;
  auto r = quasi_gorenstein_check(q.a, q.p + q.q);
  EXPECT_TRUE(r.quasi_gorenstein);
}

TEST(OrdinaryRees, LineIsFree) {
  ReesSemigroup r = ordinary_rees(corpus::polynomial_ring(1));
  EXPECT_EQ(r.generators(), sorted({make_vector({1, 0}), make_vector({1, 1})}));
  EXPECT_TRUE(r.semigroup.is_normal());
}

TEST(OrdinaryRees, PlaneMatchesSegreWithLine) {
  ReesSemigroup r = ordinary_rees(corpus::polynomial_ring(2));
  auto h = hilbert_function(r.semigroup, GradingVector{make_vector({1, 1, 0}), 1}, 8);
  AffineSemigroup s =
      segre_product(corpus::polynomial_ring(2), GradingVector::standard(2), corpus::polynomial_ring(2), GradingVector::standard(2));
  auto hs = hilbert_function(s, GradingVector{make_vector({1, 1, 0, 0}), 1}, 8);
  EXPECT_EQ(h, hs);
  EXPECT_EQ(h.counts[1], 4);
  EXPECT_EQ(h.counts[2], 9);
}

TEST(OrdinaryRees, CyclicRingReport) {
  ReesReport rep = rees_report(ordinary_rees(corpus::cyclic_ring()));
  EXPECT_FALSE(rep.normal);
  EXPECT_EQ(*rep.non_normal_witness, make_vector({2, 2, 2, 2, 2}));
  EXPECT_FALSE(rep.class_group.has_value());
}
