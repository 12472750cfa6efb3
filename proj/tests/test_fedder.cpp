#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "torees/corpus.hpp"
#include "torees/poly/fedder.hpp"
#include "torees/poly/parser.hpp"
#include "torees/poly/toric_ideal.hpp"
#include "torees/rees.hpp"

using namespace torees;

namespace {

PrimePolynomial P(const std::string& text, unsigned long p, const std::vector<std::string>& names) {
  return to_field(parse_polynomial(text, names), PrimeField(p));
}

const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> wxyz{"W", "X", "Y", "Z"};

Monomial mono(std::initializer_list<std::int32_t> e) { return Monomial(e); }

std::vector<IntVector> cyclic_rees_images() {
  std::vector<IntVector> images;
  for (long level = 0; level <= 1; ++level)
    for (const auto& g : corpus::cyclic_monomials()) images.push_back(embed(g, make_vector({level})));
  return images;
}

}  // namespace

TEST(Frobenius, BracketPowers) {
  auto b = frobenius_power(std::vector<PrimePolynomial>{P("x", 2, xyz), P("y", 2, xyz)}, 2);
  EXPECT_EQ(b[0], P("x^2", 2, xyz));
  EXPECT_EQ(b[1], P("y^2", 2, xyz));
  // Frobenius is additive in characteristic p
  EXPECT_EQ(frobenius_power(std::vector<PrimePolynomial>{P("x + y", 2, xyz)}, 2)[0], P("x^2 + y^2", 2, xyz));
  EXPECT_EQ(frobenius_power(std::vector<PrimePolynomial>{P("x + y", 3, xyz)}, 9)[0], P("x^9 + y^9", 3, xyz));
  auto m = maximal_bracket(PrimeField(5), 3, 5);
  EXPECT_EQ(m, (std::vector<PrimePolynomial>{P("x^5", 5, xyz), P("y^5", 5, xyz), P("z^5", 5, xyz)}));
}

TEST(Frobenius, RejectsNonPowers) {
  std::vector<PrimePolynomial> i{P("x", 3, xyz)};
  EXPECT_THROW(frobenius_power(i, 6), InvalidInput);
  EXPECT_THROW(frobenius_power(i, 0), InvalidInput);
  EXPECT_NO_THROW(frobenius_power(i, 1));
  std::vector<RationalPolynomial> q{parse_polynomial("x", xyz)};
  EXPECT_THROW(frobenius_power(q, 2), InvalidInput);
}

TEST(Frobenius, BracketPowerLiesInOrdinaryPower) {
  for (unsigned long p : {2UL, 3UL}) {
    std::vector<PrimePolynomial> ideal{P("x + y", p, xyz), P("y*z", p, xyz), P("x^2 - z", p, xyz)};
    for (unsigned long q : {p, p * p}) {
      if (q > 4) continue;
      // generators of I^q: all products of q generators
      std::vector<PrimePolynomial> power{PrimePolynomial::constant(PrimeField(p), 3, 1)};
      for (unsigned long k = 0; k < q; ++k) {
        std::vector<PrimePolynomial> next;
        for (const auto& a : power)
          for (const auto& g : ideal) next.push_back(a * g);
        power = next;
      }
      PolyIdeal<PrimeField> iq{3, power, MonomialOrder::grevlex(), std::nullopt};
      for (const auto& g : frobenius_power(ideal, q)) EXPECT_TRUE(iq.contains(g)) << "p=" << p << " q=" << q;
    }
  }
}

TEST(Frobenius, MaximalBracketMembership) {
  EXPECT_TRUE(in_maximal_bracket(P("x^2*y + z^3", 2, xyz), 2));
  EXPECT_FALSE(in_maximal_bracket(P("x^2*y + x*y*z", 2, xyz), 2));
  EXPECT_EQ(drop_maximal_bracket(P("x^2*y + x*y*z", 2, xyz), 2), P("x*y*z", 2, xyz));
}

TEST(FedderHypersurface, CyclicRelationInCharTwo) {
  std::vector<std::string> u{"U0", "U1", "U2", "U3", "U4"};
  PrimePolynomial f = P("U0^2 - U1*U2*U3*U4", 2, u);
  FrobeniusVerdict v = fedder_hypersurface(f, 2);
  EXPECT_TRUE(v.f_pure);
  EXPECT_EQ(*v.certificate_monomial, mono({0, 1, 1, 1, 1}));
  EXPECT_TRUE(recheck_hypersurface(f, v));
}

TEST(FedderHypersurface, MultinomialCertificateAtSeven) {
  PrimePolynomial f = P("W^2 + X^3 + Y^6 + Z^7", 7, wxyz);
  FrobeniusVerdict v = fedder_hypersurface(f, 7);
  ASSERT_TRUE(v.f_pure);
  EXPECT_EQ(*v.certificate_monomial, mono({6, 6, 6, 0}));
  // W^6 X^6 Y^6 = (W^2)^3 (X^3)^2 (Y^6)^1 inside f^6
  Integer c = oracle::multinomial({3, 2, 1});
  EXPECT_EQ(c, 60);
  EXPECT_EQ(*v.certificate_coefficient, Integer(c % 7).get_ui());
  EXPECT_NE(*v.certificate_coefficient, 0u);
  EXPECT_TRUE(recheck_hypersurface(f, v));
}

TEST(FedderHypersurface, SmoothIsFPure) {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 13UL}) {
    auto v = fedder_hypersurface(P("x", p, xyz), p);
    EXPECT_TRUE(v.f_pure) << p;
    EXPECT_TRUE(recheck_hypersurface(P("x", p, xyz), v));
  }
}

TEST(FedderHypersurface, CuspIsNeverFPure) {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL}) {
    PrimePolynomial f = P("x^2 + y^3", p, xyz);
    auto v = fedder_hypersurface(f, p);
    EXPECT_FALSE(v.f_pure) << p;
    EXPECT_TRUE(recheck_hypersurface(f, v));
  }
}

TEST(FedderHypersurface, Errors) {
  EXPECT_THROW(fedder_hypersurface(P("x", 7, xyz), 6), InvalidInput);
  EXPECT_THROW(fedder_hypersurface(P("x", 7, xyz), 5), InvalidInput);
  EXPECT_THROW(fedder_hypersurface(P("x + 1", 7, xyz), 7), InvalidInput);
  EXPECT_THROW(fedder_general({P("x", 7, xyz)}, 9), InvalidInput);
}

TEST(FedderGeneral, XYInCharTwo) {
  // (J^[2] : J) = (xy), and xy is outside m^[2]
  std::vector<std::string> xy{"x", "y"};
  std::vector<PrimePolynomial> j{P("x*y", 2, xy)};
  FrobeniusVerdict v = fedder_general(j, 2);
  EXPECT_TRUE(v.f_pure);
  EXPECT_EQ(*v.certificate_element, P("x*y", 2, xy));
  EXPECT_TRUE(recheck_general(j, v));
}

TEST(FedderGeneral, AgreesWithHypersurfaceOnPrincipalIdeals) {
  std::mt19937 rng(99);
  long compared = 0, pure = 0;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    PrimeField field(p);
    for (int trial = 0; trial < 12; ++trial) {
      PrimePolynomial f(field, 3);
      int terms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < terms; ++t) {
        Monomial m{static_cast<std::int32_t>(rng() % 3), static_cast<std::int32_t>(rng() % 3),
                   static_cast<std::int32_t>(rng() % 3)};
        if (m == Monomial{0, 0, 0}) m[0] = 1;
        f.add_term(m, static_cast<PrimeField::Element>(1 + rng() % (p - 1)));
      }
      if (f.is_zero()) continue;
      auto h = fedder_hypersurface(f, p);
      auto g = fedder_general({f}, p);
      EXPECT_EQ(h.f_pure, g.f_pure) << f.to_string(xyz) << " p=" << p;
      EXPECT_TRUE(recheck_general({f}, g));
      ++compared;
      pure += h.f_pure;
    }
  }
  EXPECT_GT(compared, 30);
  EXPECT_GT(pure, 0);
  EXPECT_LT(pure, compared);
}

TEST(FedderGeneral, NonPrincipalExamples) {
  // coordinate cross (xy, yz) is Stanley-Reisner, hence F-pure; (x^2, xy) has an embedded point
  std::vector<PrimePolynomial> sr{P("x*y", 2, xyz), P("y*z", 2, xyz)};
  auto v = fedder_general(sr, 2);
  EXPECT_TRUE(v.f_pure);
  EXPECT_TRUE(recheck_general(sr, v));
  std::vector<PrimePolynomial> emb{P("x^2", 2, xyz), P("x*y", 2, xyz)};
  auto w = fedder_general(emb, 2);
  EXPECT_FALSE(w.f_pure);
  EXPECT_TRUE(recheck_general(emb, w));
}

TEST(FedderGeneral, CyclicRingIsFPure) {
  auto ideal = toric_ideal(corpus::cyclic_monomials(), 4, PrimeField(2));
  auto v = fedder_general(ideal.generators, 2, ideal.order.weights);
  EXPECT_TRUE(v.f_pure);
  EXPECT_TRUE(recheck_general(ideal.generators, v, ideal.order.weights));
}

TEST(FedderGeneral, CyclicReesRingIsNotFPure) {
  auto images = cyclic_rees_images();
  auto ideal = toric_ideal(images, 5, PrimeField(2));
  ASSERT_EQ(ideal.nvars, 10u);
  for (const auto& g : ideal.generators) EXPECT_TRUE(substitute_monomials(g, images, 5).empty());
  auto v = fedder_general(ideal.generators, 2, ideal.order.weights);
  EXPECT_FALSE(v.f_pure);
  EXPECT_EQ(v.method, "colon");
  EXPECT_FALSE(v.colon_generators.empty());
  EXPECT_TRUE(recheck_general(ideal.generators, v, ideal.order.weights));
}

TEST(FedderGeneral, TamperedCertificateFailsRecheck) {
  std::vector<std::string> xy{"x", "y"};
  std::vector<PrimePolynomial> j{P("x*y", 2, xy)};
  FrobeniusVerdict v = fedder_general(j, 2);
  v.certificate_element = P("x", 2, xy);
  EXPECT_FALSE(recheck_general(j, v));
  FrobeniusVerdict h = fedder_hypersurface(P("x*y", 2, xy), 2);
  h.certificate_monomial = Monomial{1, 0};
  EXPECT_FALSE(recheck_hypersurface(P("x*y", 2, xy), h));
}
