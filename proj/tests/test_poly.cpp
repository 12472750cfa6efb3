#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "torees/corpus.hpp"
#include "torees/poly/fedder.hpp"
#include "torees/poly/parser.hpp"
#include "torees/poly/toric_ideal.hpp"

using namespace torees;

namespace {

using Poly = MultiPolynomial<PrimeField>;

const std::vector<std::string> xyz{"x", "y", "z"};

Poly P(const std::string& text, const PrimeField& f = PrimeField(7), const std::vector<std::string>& names = xyz) {
  return to_field(parse_polynomial(text, names), f);
}

std::vector<Poly> Ps(std::initializer_list<const char*> texts, const PrimeField& f = PrimeField(7)) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(P(t, f));
  return out;
}

std::vector<std::string> texts(const std::vector<Poly>& ps, const std::vector<std::string>& names = xyz) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(names));
  return out;
}

Poly random_homogeneous(std::mt19937& rng, const PrimeField& f, std::size_t n, long degree, int terms) {
  Poly p(f, n);
  auto mons = corpus::monomials_of_degree(n, degree);
  for (int i = 0; i < terms; ++i) {
    const IntVector& e = mons[rng() % mons.size()];
    Monomial m(n, 0);
    for (std::size_t j = 0; j < n; ++j) m[j] = static_cast<std::int32_t>(e[j].get_si());
    p.add_term(m, static_cast<PrimeField::Element>(rng() % f.characteristic()));
  }
  return p;
}

bool vanishes_on(const Poly& g, const std::vector<IntVector>& images, std::size_t ambient) {
  return substitute_monomials(g, images, ambient).empty();
}

}  // namespace

TEST(Parser, ArithmeticAndRationals) {
  auto p = parse_polynomial("3*x^2 - 1/2*y + (x + y)^2 - 4*x^2", xyz);
  EXPECT_EQ(p.to_string(xyz), parse_polynomial("2*x*y + y^2 - 1/2*y", xyz).to_string(xyz));
  EXPECT_EQ(parse_polynomial("-(x - z)", xyz), parse_polynomial("z - x", xyz));
  EXPECT_TRUE(parse_polynomial("x - x", xyz).is_zero());
  EXPECT_EQ(parse_polynomial("2/4", xyz).coefficient(Monomial(3, 0)), Rational(1, 2));
  // a slash only forms rational literals
  EXPECT_THROW(parse_polynomial("y/2", xyz), ParseError);
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_polynomial("x*y + a^", {"a", "x", "y"});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 1u);
    EXPECT_EQ(e.column, 9u);
    EXPECT_NE(std::string(e.what()).find("expected an exponent after '^'"), std::string::npos);
  }
  try {
    parse_polynomial("x + w", xyz);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column, 5u);
    EXPECT_NE(std::string(e.what()).find("undefined variable"), std::string::npos);
  }
  EXPECT_THROW(parse_polynomial("(x + y", xyz), ParseError);
  EXPECT_THROW(parse_polynomial("x y", xyz), ParseError);
  EXPECT_THROW(parse_polynomial("", xyz), ParseError);
}

TEST(Parser, ColumnOffsetAndLine) {
  try {
    PolynomialParser({"x"}, 4, 10).parse("x^");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 4u);
    EXPECT_EQ(e.column, 13u);
  }
}

TEST(Groebner, PrincipalIsMonic) {
  auto g = groebner_basis(Ps({"3*x^2 + y"}), MonomialOrder::grevlex());
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], P("x^2 + 5*y"));
}

TEST(Groebner, HandComputedSPolynomial) {
  // S(x^2, xy + y^2) = y x^2 - x (xy + y^2) = -xy^2, which reduces to y^3
  std::vector<std::string> xy{"x", "y"};
  std::vector<Poly> gens{P("x^2", PrimeField(7), xy), P("x*y + y^2", PrimeField(7), xy)};
  auto g = groebner_basis(gens, MonomialOrder::grlex());
  EXPECT_EQ(texts(g, xy), (std::vector<std::string>{"x*y + y^2", "x^2", "y^3"}));
  EXPECT_TRUE(normal_form(P("y^3", PrimeField(7), xy), g, MonomialOrder::grlex()).is_zero());
}

TEST(Groebner, RationalCoefficients) {
  std::vector<RationalPolynomial> gens{parse_polynomial("x^2 + y^2 - 1", xyz), parse_polynomial("x - 1/3*y", xyz)};
  auto g = groebner_basis(gens, MonomialOrder::lex());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], parse_polynomial("y^2 - 9/10", xyz));
  EXPECT_EQ(g[1], parse_polynomial("x - 1/3*y", xyz));
}

TEST(Groebner, MembershipMatchesLinearAlgebra) {
  std::mt19937 rng(424242);
  PrimeField f(5);
  long checked = 0, members = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Poly> gens;
    int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) gens.push_back(random_homogeneous(rng, f, 3, 2, 3));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); }), gens.end());
    if (gens.empty()) continue;
    PolyIdeal<PrimeField> ideal{3, gens, MonomialOrder::grevlex(), std::nullopt};
    for (int k = 0; k < 6; ++k) {
      Poly h(f, 3);
      if (k % 2 == 0) {
        for (const auto& g : gens) h = h + g * random_homogeneous(rng, f, 3, 1, 2);
      } else {
        h = random_homogeneous(rng, f, 3, 3, 4);
      }
      if (h.is_zero()) continue;
      bool expected = oracle::homogeneous_member(h, gens);
      EXPECT_EQ(ideal.contains(h), expected) << h.to_string(xyz);
      ++checked;
      members += expected;
    }
    EXPECT_TRUE(ideal.basis_certified());
  }
  EXPECT_GT(checked, 100);
  EXPECT_GT(members, 20);
  EXPECT_LT(members, checked);
}

TEST(Groebner, WeightedOrderWithEliminationBlock) {
  // elimination of t from (x - t^2, y - t^3) gives the cusp y^2 - x^3
  std::vector<std::string> txy{"t", "x", "y"};
  PrimeField f(11);
  std::vector<Poly> gens{P("x - t^2", f, txy), P("y - t^3", f, txy)};
  auto e = eliminate_front(gens, 1, {1, 2, 3});
  ASSERT_EQ(e.size(), 1u);
  std::vector<std::string> xy{"x", "y"};
  EXPECT_EQ(e[0].to_string(xy), P("y^2 - x^3", f, xy).monic(MonomialOrder::grevlex({2, 3})).to_string(xy));
}

TEST(Toric, CyclicMapIsPrincipal) {
  PrimeField f(2);
  auto ideal = toric_ideal(corpus::cyclic_monomials(), 4, f);
  ASSERT_EQ(ideal.generators.size(), 1u);
  std::vector<std::string> u{"U1", "U2", "U3", "U4", "U0"};
  EXPECT_EQ(ideal.generators[0], P("U0^2 - U1*U2*U3*U4", f, u));
  EXPECT_TRUE(vanishes_on(ideal.generators[0], corpus::cyclic_monomials(), 4));
}

TEST(Toric, CyclicMapOverRationals) {
  auto ideal = toric_ideal(corpus::cyclic_monomials(), 4, RationalField{});
  ASSERT_EQ(ideal.generators.size(), 1u);
  std::vector<std::string> u{"U1", "U2", "U3", "U4", "U0"};
  auto g = ideal.generators[0];
  EXPECT_TRUE(g == parse_polynomial("U0^2 - U1*U2*U3*U4", u) || g == parse_polynomial("U1*U2*U3*U4 - U0^2", u));
}

TEST(Toric, QuadricMap) {
  PrimeField f(7);
  auto ideal = toric_ideal(corpus::quadric_cone().generators(), 4, f);
  ASSERT_EQ(ideal.generators.size(), 1u);
  // generators are sorted: by, bx, ay, ax
  std::vector<std::string> u{"by", "bx", "ay", "ax"};
  auto g = ideal.generators[0];
  EXPECT_TRUE(g == P("ax*by - ay*bx", f, u) || g == P("ay*bx - ax*by", f, u)) << g.to_string(u);
}

TEST(Toric, InjectiveMapGivesZeroIdeal) {
  auto ideal = toric_ideal({make_vector({1, 0}), make_vector({0, 1})}, 2, PrimeField(3));
  EXPECT_TRUE(ideal.generators.empty());
}

TEST(Toric, SaturationIsNeeded) {
  // twisted cubic: the kernel lattice has rank 2 but the ideal needs 3 quadrics
  std::vector<IntVector> images{make_vector({3, 0}), make_vector({2, 1}), make_vector({1, 2}), make_vector({0, 3})};
  auto ideal = toric_ideal(images, 2, PrimeField(5));
  EXPECT_EQ(ideal.generators.size(), 3u);
  for (const auto& g : ideal.generators) {
    EXPECT_TRUE(vanishes_on(g, images, 2));
    EXPECT_EQ(weighted_degree(g.terms().begin()->first, {}), 2);
  }
}

TEST(Toric, GeneratorsVanishOnParametrization) {
  std::vector<std::vector<IntVector>> maps{corpus::quadric_cone().generators(), corpus::veronese(2, 3).generators(),
                                           corpus::veronese(3, 2).generators(),
                                           {make_vector({2}), make_vector({3})},
                                           {make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({1, 1, 1}),
                                            make_vector({2, 0, 1})}};
  for (const auto& images : maps) {
    std::size_t ambient = images.front().size();
    auto ideal = toric_ideal(images, ambient, PrimeField(3));
    EXPECT_FALSE(ideal.generators.empty());
    for (const auto& g : ideal.generators) EXPECT_TRUE(vanishes_on(g, images, ambient));
    EXPECT_TRUE(ideal.basis_certified());
  }
}

TEST(Toric, NumericalSemigroupCusp) {
  auto ideal = toric_ideal({make_vector({2}), make_vector({3})}, 1, PrimeField(7));
  ASSERT_EQ(ideal.generators.size(), 1u);
  std::vector<std::string> xy{"x", "y"};
  auto g = ideal.generators[0];
  EXPECT_TRUE(g == P("x^3 - y^2", PrimeField(7), xy) || g == P("y^2 - x^3", PrimeField(7), xy));
}

TEST(IdealOps, Intersection) {
  auto r = intersect(Ps({"x"}), Ps({"y"}), 3);
  EXPECT_TRUE(same_ideal(r, Ps({"x*y"}), MonomialOrder::grevlex()));
  auto s = intersect(Ps({"x^2", "y"}), Ps({"x", "y^2"}), 3);
  EXPECT_TRUE(same_ideal(s, Ps({"x^2", "x*y", "y^2"}), MonomialOrder::grevlex()));
  auto t = intersect(Ps({"x - 1"}), Ps({"x + 1"}), 3);
  EXPECT_TRUE(same_ideal(t, Ps({"x^2 - 1"}), MonomialOrder::grevlex()));
}

TEST(IdealOps, Quotient) {
  EXPECT_TRUE(same_ideal(quotient(Ps({"x*y", "y^2"}), P("y"), 3), Ps({"x", "y"}), MonomialOrder::grevlex()));
  EXPECT_TRUE(same_ideal(quotient(Ps({"x^2", "x*y"}), P("x"), 3), Ps({"x", "y"}), MonomialOrder::grevlex()));
  EXPECT_TRUE(same_ideal(quotient(Ps({"x^2*z"}), P("x*z"), 3), Ps({"x"}), MonomialOrder::grevlex()));
  EXPECT_THROW(quotient(Ps({"x"}), Poly(PrimeField(7), 3), 3), InvalidInput);
}

TEST(IdealOps, ColonByIdeal) {
  auto c = colon(Ps({"x^2", "x*y", "y^2"}), Ps({"x", "y"}), 3);
  EXPECT_TRUE(same_ideal(c, Ps({"x", "y"}), MonomialOrder::grevlex()));
  auto d = colon(Ps({"x*y*z"}), Ps({"x", "y"}), 3);
  EXPECT_TRUE(same_ideal(d, Ps({"x*y*z"}), MonomialOrder::grevlex()));
}

TEST(IdealOps, SaturationByVariable) {
  auto s = saturate_by_variable(Ps({"x^2*y", "x*y^2"}), 1, 3);
  EXPECT_TRUE(same_ideal(s, Ps({"x"}), MonomialOrder::grevlex()));
  // non-homogeneous input takes the elimination route
  auto t = saturate_by_variable(Ps({"x*y - y", "y^2*z"}), 1, 3);
  EXPECT_TRUE(same_ideal(t, Ps({"x - 1", "z"}), MonomialOrder::grevlex()));
  // both routes agree on a homogeneous ideal
  auto h = Ps({"x^3 - x*y*z", "y^2*z"});
  EXPECT_TRUE(same_ideal(saturate_by_variable(h, 2, 3), saturate_by_variable(h, 2, 3, {1, 1, 1}),
                         MonomialOrder::grevlex()));
}

TEST(IdealOps, WeightsMustBePositive) {
  EXPECT_THROW(resolve_weights({1, 0}, 2), InvalidInput);
  EXPECT_THROW(resolve_weights({1}, 2), InvalidInput);
  EXPECT_EQ(resolve_weights({}, 3), (std::vector<long>{1, 1, 1}));
}
