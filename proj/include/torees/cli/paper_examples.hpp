#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torees/cli/report.hpp"
#include "torees/corpus.hpp"
#include "torees/poly/fedder.hpp"
#include "torees/poly/parser.hpp"
#include "torees/poly/toric_ideal.hpp"
#include "torees/rees.hpp"

namespace torees::cli {

struct CheckOutcome {
  bool passed = false;
  Json detail = Json::object();
};

struct PaperCheck {
  std::string tag;    // s3, s4 or s6
  std::string name;
  std::string claim;  // the statement a failure contradicts
  std::function<CheckOutcome()> run;
};

namespace examples {

inline std::vector<MonomialDivisor> copies(const MonomialDivisor& d, long n) {
  return std::vector<MonomialDivisor>(static_cast<std::size_t>(n), d);
}

inline const std::vector<std::pair<std::size_t, long>>& veronese_cases() {
  static const std::vector<std::pair<std::size_t, long>> cases{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  return cases;
}

inline CheckOutcome quadric_frontier() {
  CheckOutcome out{true, Json::array()};
  AffineSemigroup a = corpus::quadric_cone();
  MonomialDivisor p = prime_divisor(a, corpus::quadric_p(a)), q = prime_divisor(a, corpus::quadric_q(a));
  for (long n = 1; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m) {
      auto ds = copies(p, n);
      for (const auto& d : copies(q, m)) ds.push_back(d);
      ReesSemigroup b = build_multi_symbolic_rees(a, ds);
      AbelianGroupPresentation cl = class_group(b.semigroup);
      bool qg = class_of(cl, canonical_divisor(b.semigroup)).is_zero();
      bool ok = cl.invariant_factors() == make_vector({0}) && qg == (n == m);
      out.passed = out.passed && ok;
      out.detail.push_back({{"n", n},
                            {"m", m},
                            {"generators", b.generators().size()},
                            {"class_group", group_text(cl.invariant_factors())},
                            {"quasi_gorenstein", qg},
                            {"ok", ok}});
    }
  return out;
}

inline CheckOutcome veronese_class_groups() {
  CheckOutcome out{true, Json::array()};
  for (auto [m, n] : veronese_cases()) {
    AffineSemigroup a = corpus::veronese(m, n);
    IntVector inv = class_group(a).invariant_factors();
    bool ok = inv == make_vector({n});
    out.passed = out.passed && ok;
    out.detail.push_back({{"m", m}, {"n", n}, {"class_group", group_text(inv)}, {"ok", ok}});
  }
  return out;
}

/// A monomial of A lies in P^(k) exactly when X_1^k divides it.
inline CheckOutcome veronese_symbolic_membership() {
  CheckOutcome out{true, Json::array()};
  for (auto [m, n] : veronese_cases()) {
    AffineSemigroup a = corpus::veronese(m, n);
    MonomialDivisor p = prime_divisor(a, corpus::veronese_p(a));
    long checked = 0, mismatches = 0;
    for (long k = 1; k <= 3; ++k)
      for (long d = 0; d <= 12; d += n)
        for (const auto& u : corpus::monomials_of_degree(m, d)) {
          ++checked;
          if (in_divisorial_ideal(a, Integer(k) * p, u) != (u[0] >= k)) ++mismatches;
        }
    out.passed = out.passed && mismatches == 0;
    out.detail.push_back({{"m", m}, {"n", n}, {"monomials_checked", checked}, {"mismatches", mismatches}});
  }
  return out;
}

/// R_s(P^(alpha)) against the n-th Veronese of K[X_1..X_m, X_1^alpha U], U of weight 0.
inline CheckOutcome veronese_rees_structure(long max_degree = 8) {
  CheckOutcome out{true, Json::array()};
  for (auto [m, n] : veronese_cases())
    for (long alpha = 1; alpha <= 2; ++alpha) {
      AffineSemigroup a = corpus::veronese(m, n);
      MonomialDivisor p = prime_divisor(a, corpus::veronese_p(a));
      ReesSemigroup b = build_multi_symbolic_rees(a, {Integer(alpha) * p});
      std::vector<IntVector> gens;
      for (std::size_t i = 0; i < m; ++i) gens.push_back(unit_vector(m + 1, i));
      IntVector lifted = zero_vector(m + 1);
      lifted[0] = alpha;
      lifted[m] = 1;
      gens.push_back(lifted);
      GradingVector x_degree{IntVector(m, Integer(1)), 1};
      x_degree.weights.push_back(0);
      AffineSemigroup ver = veronese_subsemigroup(AffineSemigroup(gens, m + 1), x_degree, n);
      GradingVector g = x_degree;
      g.denominator = n;
      HilbertFunctionTable hb = hilbert_function(b.semigroup, g, max_degree);
      HilbertFunctionTable hv = hilbert_function(ver, g, max_degree);
      bool same_generators = b.generators() == ver.generators();
      bool ok = hb == hv && same_generators;
      out.passed = out.passed && ok;
      Json counts = Json::array();
      for (const auto& c : hb.counts) counts.push_back(to_json(c));
      out.detail.push_back({{"m", m},
                            {"n", n},
                            {"alpha", alpha},
                            {"hilbert_function", counts},
                            {"same_generators", same_generators},
                            {"ok", ok}});
    }
  return out;
}

inline CheckOutcome iterated_construction() {
  CheckOutcome out{true, Json::array()};
  AffineSemigroup q = corpus::quadric_cone();
  AffineSemigroup v = corpus::veronese(2, 2);
  MonomialDivisor vp = prime_divisor(v, corpus::veronese_p(v));
  struct Case {
    std::string name;
    AffineSemigroup a;
    std::vector<MonomialDivisor> ds;
  };
  std::vector<Case> cases{{"quadric-cone (P,Q)", q, {prime_divisor(q, corpus::quadric_p(q)), prime_divisor(q, corpus::quadric_q(q))}},
                          {"veronese(2,2) (P,P)", v, {vp, vp}}};
  for (const auto& c : cases) {
    IteratedCheck it = iterated_isomorphism_check(c.a, c.ds, 2);
    out.passed = out.passed && it.matches;
    out.detail.push_back({{"case", c.name}, {"slices", it.slices.size()}, {"matches", it.matches}});
  }
  return out;
}

inline CheckOutcome class_group_transfer_corpus() {
  CheckOutcome out{true, Json::array()};
  auto record = [&](const std::string& name, const AffineSemigroup& a, const std::vector<MonomialDivisor>& ds) {
    ReesSemigroup b = build_multi_symbolic_rees(a, ds);
    ClassTransfer t = class_group_transfer(a, b);
    bool ok = t.same_invariant_factors && t.isomorphism && t.omega_formula && t.pde;
    out.passed = out.passed && ok;
    out.detail.push_back({{"case", name},
                          {"class_group_a", group_text(t.invariant_factors_a)},
                          {"class_group_b", group_text(t.invariant_factors_b)},
                          {"isomorphism", t.isomorphism},
                          {"omega_formula", t.omega_formula},
                          {"pde", t.pde}});
  };
  AffineSemigroup q = corpus::quadric_cone();
  MonomialDivisor p = prime_divisor(q, corpus::quadric_p(q)), qq = prime_divisor(q, corpus::quadric_q(q));
  for (long n = 1; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m) {
      auto ds = copies(p, n);
      for (const auto& d : copies(qq, m)) ds.push_back(d);
      record("quadric-cone n=" + std::to_string(n) + " m=" + std::to_string(m), q, ds);
    }
  for (auto [m, n] : veronese_cases()) {
    AffineSemigroup v = corpus::veronese(m, n);
    MonomialDivisor vp = prime_divisor(v, corpus::veronese_p(v));
    std::string tag = "veronese(" + std::to_string(m) + "," + std::to_string(n) + ")";
    record(tag + " P", v, {vp});
    record(tag + " P^(2)", v, {Integer(2) * vp});
    record(tag + " (P,P)", v, {vp, vp});
  }
  return out;
}

inline CheckOutcome finite_order_decomposition(long max_degree = 6) {
  AffineSemigroup v = corpus::veronese(2, 2);
  CmDecomposition cm = cm_decomposition_check(v, {prime_divisor(v, corpus::veronese_p(v))}, max_degree);
  CheckOutcome out{cm.holds, Json::object()};
  Json counts = Json::array();
  for (const auto& c : cm.counts)
    counts.push_back({{"degree", c.degree}, {"quotient", c.quotient}, {"decomposition", c.decomposition}});
  out.detail["order"] = to_json(cm.orders.front());
  out.detail["counts"] = counts;
  return out;
}

inline CheckOutcome infinite_order_inapplicable() {
  AffineSemigroup q = corpus::quadric_cone();
  try {
    cm_decomposition_check(q, {prime_divisor(q, corpus::quadric_p(q))}, 2);
  } catch (const InfiniteOrderClass& e) {
    std::string msg = e.what();
    return {msg == "infinite order, criterion inapplicable", {{"message", msg}}};
  }
  return {false, {{"message", "criterion ran on an infinite-order class"}}};
}

inline CheckOutcome cyclic_hypersurface() {
  auto ideal = toric_ideal(corpus::cyclic_monomials(), 4, RationalField{});
  std::vector<std::string> names{"U1", "U2", "U3", "U4", "U0"};
  RationalPolynomial expected = parse_polynomial("U0^2 - U1*U2*U3*U4", names);
  bool ok = ideal.generators.size() == 1 &&
            (ideal.generators[0] == expected || ideal.generators[0] == expected.scaled(Rational(-1)));
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string(names));
  return {ok, {{"generators", gens}}};
}

inline CheckOutcome cyclic_normal() {
  NormalityVerdict v = is_normal(corpus::cyclic_ring());
  return {v.normal, {{"normal", v.normal}}};
}

inline CheckOutcome cyclic_rees_not_normal() {
  ReesSemigroup r = ordinary_rees(corpus::cyclic_ring());
  NormalityVerdict v = is_normal(r.semigroup);
  IntVector w = make_vector({2, 2, 2, 2, 2});
  bool ok = !v.normal && v.witness == w && !r.semigroup.contains(w) && r.semigroup.contains(Integer(2) * w) &&
            r.semigroup.in_normalization(w);
  Json d{{"normal", v.normal}};
  if (v.witness) d["witness"] = to_json(*v.witness);
  return {ok, d};
}

inline Json verdict_json(const FrobeniusVerdict& v, const std::vector<std::string>& names) {
  Json j{{"p", v.p}, {"f_pure", v.f_pure}, {"method", v.method}};
  if (v.certificate_monomial) {
    IntVector e;
    for (auto x : *v.certificate_monomial) e.push_back(Integer(x));
    j["certificate_monomial"] = monomial_text(e, names);
  }
  if (v.certificate_coefficient) j["certificate_coefficient"] = *v.certificate_coefficient;
  if (v.certificate_element) j["certificate_element"] = v.certificate_element->to_string(names);
  if (!v.colon_generators.empty()) {
    Json g = Json::array();
    for (const auto& h : v.colon_generators) g.push_back(h.to_string(names));
    j["colon_generators"] = g;
    j["colon_factors"] = v.colon_factors.size();
  }
  return j;
}

inline CheckOutcome cyclic_f_pure() {
  PrimeField f2(2);
  auto ideal = toric_ideal(corpus::cyclic_monomials(), 4, f2);
  std::vector<std::string> names{"U1", "U2", "U3", "U4", "U0"};
  if (ideal.generators.size() != 1) return {false, {{"reason", "presentation is not principal"}}};
  FrobeniusVerdict hv = fedder_hypersurface(ideal.generators[0], 2);
  FrobeniusVerdict gv = fedder_general(ideal.generators, 2, ideal.order.weights);
  bool ok = hv.f_pure && gv.f_pure && recheck_hypersurface(ideal.generators[0], hv) &&
            recheck_general(ideal.generators, gv, ideal.order.weights) &&
            hv.certificate_monomial == Monomial{1, 1, 1, 1, 0};
  return {ok, {{"hypersurface", verdict_json(hv, names)}, {"colon", verdict_json(gv, names)}}};
}

inline std::vector<std::string> rees_presentation_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("U" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("V" + std::to_string(i + 1));
  return names;
}

/// Presentation of A[mT] on generators u_i (level 0) then u_i T (level 1).
inline std::vector<IntVector> rees_presentation_images(const std::vector<IntVector>& gens) {
  std::vector<IntVector> out;
  for (long level = 0; level <= 1; ++level)
    for (const auto& g : gens) out.push_back(embed(g, make_vector({level})));
  return out;
}

inline CheckOutcome cyclic_rees_not_f_pure() {
  PrimeField f2(2);
  auto images = rees_presentation_images(corpus::cyclic_monomials());
  auto ideal = toric_ideal(images, 5, f2);
  FrobeniusVerdict v = fedder_general(ideal.generators, 2, ideal.order.weights);
  bool ok = !v.f_pure && recheck_general(ideal.generators, v, ideal.order.weights);
  auto names = rees_presentation_names(5);
  Json d = verdict_json(v, names);
  d["presentation_generators"] = ideal.generators.size();
  return {ok, d};
}

inline CheckOutcome hypersurface_a_invariant(const std::string& text, const std::vector<std::string>& names,
                                             const std::vector<long>& weights, long expected) {
  RationalPolynomial f = parse_polynomial(text, names);
  if (!f.is_homogeneous(weights)) return {false, {{"reason", "polynomial is not quasi-homogeneous"}}};
  long degree = weighted_degree(f.terms().begin()->first, weights);
  Integer a = a_invariant_hypersurface(weights, degree);
  return {a == expected, {{"polynomial", text}, {"degree", degree}, {"a_invariant", to_json(a)}}};
}

inline CheckOutcome hypersurface_f_pure_p7() {
  PrimeField f7(7);
  std::vector<std::string> names{"W", "X", "Y", "Z"};
  PrimePolynomial f = to_field(parse_polynomial("W^2 + X^3 + Y^6 + Z^7", names), f7);
  FrobeniusVerdict v = fedder_hypersurface(f, 7);
  bool ok = v.f_pure && recheck_hypersurface(f, v) && v.certificate_monomial == Monomial{6, 6, 6, 0} &&
            v.certificate_coefficient == PrimeField::Element{60 % 7};
  Json d = verdict_json(v, names);
  d["coefficient_over_z"] = 60;
  return {ok, d};
}

inline CheckOutcome rees_segre(long max_degree = 8) {
  CheckOutcome out{true, Json::array()};
  for (std::size_t d = 2; d <= 3; ++d) {
    AffineSemigroup a = corpus::polynomial_ring(d);
    ReesSemigroup r = ordinary_rees(a);
    GradingVector g{IntVector(d, Integer(1)), 1};
    GradingVector gr = g.extended(1, 0);
    AffineSemigroup st = corpus::polynomial_ring(2);
    AffineSemigroup segre = segre_product(a, g, st, GradingVector::standard(2));
    GradingVector gs = g.extended(2, 0);
    HilbertFunctionTable hr = hilbert_function(r.semigroup, gr, max_degree);
    HilbertFunctionTable hs = hilbert_function(segre, gs, max_degree);
    bool ok = hr == hs;
    out.passed = out.passed && ok;
    Json counts = Json::array();
    for (const auto& c : hr.counts) counts.push_back(to_json(c));
    out.detail.push_back({{"variables", d}, {"hilbert_function", counts}, {"ok", ok}});
  }
  return out;
}

}  // namespace examples

inline std::vector<PaperCheck> paper_checks() {
  using namespace examples;
  return {
      {"s4", "quadric-gorenstein-frontier",
       "over K[ax,ay,bx,by] with n copies of (ax,ay) and m of (ax,bx): Cl(B) = Z and B is Gorenstein iff n = m",
       [] { return quadric_frontier(); }},
      {"s4", "veronese-class-group", "the n-th Veronese of K[X_1..X_m] has Cl = Z/n",
       [] { return veronese_class_groups(); }},
      {"s4", "veronese-symbolic-membership", "a monomial of A lies in P^(k) iff it is a multiple of X_1^k",
       [] { return veronese_symbolic_membership(); }},
      {"s4", "veronese-rees-structure",
       "R_s(P^(alpha)) is the n-th Veronese of K[X_1..X_m, X_1^alpha U] with U of weight zero",
       [] { return veronese_rees_structure(); }},
      {"s3", "iterated-construction", "A(I_1..I_k) equals the symbolic Rees algebra of I_k B over B = A(I_1..I_{k-1})",
       [] { return iterated_construction(); }},
      {"s3", "class-group-transfer",
       "Cl(A) -> Cl(B) is an isomorphism, [omega_B] = i([omega_A] + sum [I_j]) and B has PDE over A",
       [] { return class_group_transfer_corpus(); }},
      {"s3", "finite-order-decomposition",
       "for classes of finite order the quotient of B by the parameters decomposes into reflexive products",
       [] { return finite_order_decomposition(); }},
      {"s3", "infinite-order-inapplicable", "the decomposition criterion needs classes of finite order",
       [] { return infinite_order_inapplicable(); }},
      {"s6", "cyclic-ring-hypersurface", "K[W^3X, X^3Y, Y^3Z, Z^3W, W^2X^2Y^2Z^2] = K[U0..U4]/(U0^2 - U1U2U3U4)",
       [] { return cyclic_hypersurface(); }},
      {"s6", "cyclic-ring-normal", "the cyclic monomial ring A is normal", [] { return cyclic_normal(); }},
      {"s6", "cyclic-rees-not-normal", "A[mT] is not normal: W^2X^2Y^2Z^2T^2 is integral but missing",
       [] { return cyclic_rees_not_normal(); }},
      {"s6", "cyclic-ring-f-pure", "in characteristic 2 the cyclic monomial ring A is F-pure",
       [] { return cyclic_f_pure(); }},
      {"s6", "cyclic-rees-not-f-pure", "in characteristic 2 the Rees ring A[mT] is not F-pure",
       [] { return cyclic_rees_not_f_pure(); }},
      {"s6", "associated-graded-a-invariant", "a(K[W,X,Y,Z]/(W^2)) = -2",
       [] { return hypersurface_a_invariant("W^2", {"W", "X", "Y", "Z"}, {1, 1, 1, 1}, -2); }},
      {"s6", "chart-a-invariant", "a(K[U1,U2,U3,Z]/(U1^2 + U2^3Z + U3^6Z^4 + Z^5)) = 0 with weights 15, 8, 1, 6",
       [] {
         return hypersurface_a_invariant("U1^2 + U2^3*Z + U3^6*Z^4 + Z^5", {"U1", "U2", "U3", "Z"}, {15, 8, 1, 6}, 0);
       }},
      {"s6", "hypersurface-f-pure-p7", "W^2 + X^3 + Y^6 + Z^7 defines an F-pure ring in characteristic 7",
       [] { return hypersurface_f_pure_p7(); }},
      {"s6", "rees-segre-product", "A[mT] is the Segre product A # K[S,T] for A = K[x,y] and K[x,y,z]",
       [] { return rees_segre(); }},
  };
}

inline std::vector<std::string> paper_filters() {
  std::vector<std::string> out{"s3", "s4", "s6"};
  for (const auto& c : paper_checks()) out.push_back(c.name);
  return out;
}

/// Runs the built-in checks, optionally restricted to a tag or a check name.
inline Json run_paper_examples(const std::optional<std::string>& only, bool& all_passed) {
  auto filters = paper_filters();
  if (only && std::find(filters.begin(), filters.end(), *only) == filters.end()) {
    std::string list;
    for (const auto& f : filters) list += (list.empty() ? "" : ", ") + f;
    throw InvalidInput("unknown filter '" + *only + "'; valid filters: " + list);
  }
  all_passed = true;
  Json checks = Json::array();
  for (const auto& c : paper_checks()) {
    if (only && *only != c.tag && *only != c.name) continue;
    auto start = std::chrono::steady_clock::now();
    CheckOutcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, {{"error", e.what()}}};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json entry{{"tag", c.tag}, {"name", c.name}, {"passed", r.passed}, {"claim", c.claim}};
    if (!r.passed) entry["contradicts"] = c.tag + "/" + c.name + ": " + c.claim;
    entry["detail"] = r.detail;
    entry["wall_ms"] = ms;
    all_passed = all_passed && r.passed;
    checks.push_back(std::move(entry));
  }
  return checks;
}

}  // namespace torees::cli
