#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torees/cli/paper_examples.hpp"
#include "torees/cli/report.hpp"
#include "torees/cli/scenario.hpp"

namespace torees::cli {

struct RunOptions {
  std::optional<long> max_degree;
  std::optional<unsigned long> characteristic;
};

struct RunResult {
  Json report;
  int exit_code = 0;  // 0 ok, 1 check failure, 2 task error
};

/// A task's failed expectation, reported as a check failure rather than an error.
struct CheckFailure : Error {
  using Error::Error;
};

namespace detail {

class TaskContext {
 public:
  TaskContext(const Scenario& s, const TaskDef& t, const RunOptions& o) : scenario_(s), task_(t), options_(o) {}

  const TaskDef& task() const { return task_; }

  void allow(std::initializer_list<const char*> keys) const {
    std::set<std::string> ok(keys.begin(), keys.end());
    ok.insert("expect");
    for (const auto& [k, v] : task_.params)
      if (!ok.count(k)) throw InvalidInput("task '" + task_.kind + "' does not take parameter '" + k + "'");
  }

  long integer(const std::string& key, long fallback) const {
    auto v = task_.param(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      long x = std::stol(*v, &used);
      if (used != v->size()) throw std::invalid_argument(*v);
      return x;
    } catch (const std::exception&) {
      throw InvalidInput("parameter '" + key + "' must be an integer, got '" + *v + "'");
    }
  }

  std::vector<long> integers(const std::string& key) const {
    std::vector<long> out;
    for (const auto& w : list(key)) {
      try {
        std::size_t used = 0;
        out.push_back(std::stol(w, &used));
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw InvalidInput("parameter '" + key + "' must list integers, got '" + w + "'");
      }
    }
    return out;
  }

  std::vector<std::string> list(const std::string& key) const {
    auto v = task_.param(key);
    if (!v) throw InvalidInput("task '" + task_.kind + "' needs parameter '" + key + "'");
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = v->find(',', start);
      std::string w = v->substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (w.empty()) throw InvalidInput("empty entry in parameter '" + key + "'");
      out.push_back(w);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }

  long max_degree(long fallback) const {
    if (task_.param("max-degree")) return integer("max-degree", fallback);
    return options_.max_degree.value_or(fallback);
  }

  unsigned long characteristic() const {
    if (task_.param("p")) {
      long p = integer("p", 0);
      if (p <= 0 || !is_prime_number(static_cast<unsigned long>(p))) throw InvalidInput("p must be a prime");
      return static_cast<unsigned long>(p);
    }
    if (options_.characteristic) return *options_.characteristic;
    if (scenario_.characteristic) return *scenario_.characteristic;
    return 0;
  }

  const RingDef& ring_def() const {
    const RingDef* r = scenario_.ring(task_.target);
    if (!r) throw InvalidInput("task '" + task_.kind + "' needs a ring target");
    return *r;
  }

  const AffineSemigroup& ring() {
    if (!ring_) ring_ = AffineSemigroup(ring_def().generators, ring_def().variables.size());
    return *ring_;
  }

  GradingVector grading() {
    const RingDef& r = ring_def();
    return r.grading ? *r.grading : default_grading(ring());
  }

  MonomialDivisor divisor(const std::string& name, int depth = 0) {
    if (depth > 64) throw InvalidInput("divisor definitions are circular");
    if (const PrimeDef* p = scenario_.prime(name)) {
      if (p->ring != task_.target) throw InvalidInput("prime '" + name + "' lives on ring '" + p->ring + "'");
      return prime_divisor(ring(), facet_of_prime(ring(), p->monomials));
    }
    if (const DivisorDef* d = scenario_.divisor(name)) {
      if (d->ring != task_.target) throw InvalidInput("divisor '" + name + "' lives on ring '" + d->ring + "'");
      MonomialDivisor sum = zero_divisor(ring());
      for (const auto& [c, ref] : d->terms) sum = sum + Integer(c) * divisor(ref, depth + 1);
      return sum;
    }
    throw InvalidInput("undefined divisor '" + name + "'");
  }

  std::vector<MonomialDivisor> divisors(const std::string& key) {
    std::vector<MonomialDivisor> out;
    for (const auto& n : list(key)) out.push_back(divisor(n));
    return out;
  }

  const std::vector<std::string>& names() const { return ring_def().variables; }

  Json definition() const {
    if (const RingDef* r = scenario_.ring(task_.target)) {
      Json j{{"kind", "ring"}, {"variables", r->variables}, {"generators", r->generator_text}};
      if (r->grading) {
        j["grading"] = to_json(r->grading->weights);
        j["grading_denominator"] = to_json(r->grading->denominator);
      }
      return j;
    }
    if (const HypersurfaceDef* h = scenario_.hypersurface(task_.target))
      return {{"kind", "hypersurface"}, {"variables", h->variables}, {"weights", h->weights}, {"polynomial", h->text}};
    return nullptr;
  }

  const Scenario& scenario() const { return scenario_; }

 private:
  const Scenario& scenario_;
  const TaskDef& task_;
  const RunOptions& options_;
  std::optional<AffineSemigroup> ring_;
};

inline std::vector<std::string> with_levels(const std::vector<std::string>& names, std::size_t k,
                                            const std::string& stem) {
  std::vector<std::string> out = names;
  if (k == 1) {
    out.push_back(stem);
  } else {
    for (std::size_t i = 0; i < k; ++i) out.push_back(stem + std::to_string(i + 1));
  }
  return out;
}

struct TaskOutput {
  Json result = Json::object();
  std::string verdict;
  bool check_failed = false;
};

inline TaskOutput run_class_group(TaskContext& c) {
  c.allow({});
  AbelianGroupPresentation cl = class_group(c.ring());
  DivisorClass omega = class_of(cl, canonical_divisor(c.ring()));
  TaskOutput out;
  out.verdict = group_text(cl.invariant_factors());
  out.result = {{"facets", c.ring().facet_count()},
                {"invariant_factors", to_json(cl.invariant_factors())},
                {"class_group", out.verdict},
                {"canonical_class", to_json(omega.coordinates)},
                {"quasi_gorenstein", omega.is_zero()}};
  return out;
}

inline TaskOutput run_normality(TaskContext& c) {
  c.allow({});
  NormalityVerdict v = is_normal(c.ring());
  TaskOutput out;
  out.verdict = v.normal ? "normal" : "not-normal";
  out.result = {{"normal", v.normal}, {"hilbert_basis", monomials_json(c.ring().hilbert_basis(), c.names())}};
  if (v.witness) {
    out.result["witness"] = to_json(*v.witness);
    out.result["witness_monomial"] = monomial_text(*v.witness, c.names());
  }
  return out;
}

inline TaskOutput run_a_invariant(TaskContext& c) {
  c.allow({});
  TaskOutput out;
  if (const HypersurfaceDef* h = c.scenario().hypersurface(c.task().target)) {
    if (h->polynomial.is_zero()) throw InvalidInput("hypersurface polynomial is zero");
    if (!h->polynomial.is_homogeneous(h->weights)) throw InvalidInput("polynomial is not quasi-homogeneous for the weights");
    long degree = weighted_degree(h->polynomial.terms().begin()->first, h->weights);
    Integer a = a_invariant_hypersurface(h->weights, degree);
    out.verdict = a.get_str();
    out.result = {{"method", "degree minus weight sum"}, {"degree", degree}, {"a_invariant", to_json(a)}};
    return out;
  }
  GradingVector g = c.grading();
  Integer a = a_invariant_normal(c.ring(), g);
  out.verdict = a.get_str();
  out.result = {{"method", "least interior degree"},
                {"grading", to_json(g.weights)},
                {"grading_denominator", to_json(g.denominator)},
                {"a_invariant", to_json(a)}};
  return out;
}

inline Json ideal_json(const DivisorialIdeal& i, const std::vector<std::string>& names) {
  return {{"divisor", to_json(i.divisor.coefficients)}, {"generators", monomials_json(i.generators, names)}};
}

inline std::string join(const Json& arr) {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : ", ") + x.get<std::string>();
  return s;
}

inline TaskOutput run_symbolic_power(TaskContext& c) {
  c.allow({"divisor", "n"});
  long n = c.integer("n", 1);
  auto d = c.divisor(c.list("divisor").front());
  TaskOutput out;
  out.result = ideal_json(symbolic_power(c.ring(), d, n), c.names());
  out.result["n"] = n;
  out.verdict = join(out.result["generators"]);
  return out;
}

inline TaskOutput run_reflexive_product(TaskContext& c) {
  c.allow({"divisors", "exponents"});
  auto ds = c.divisors("divisors");
  auto es = c.task().param("exponents") ? c.integers("exponents") : std::vector<long>(ds.size(), 1);
  TaskOutput out;
  out.result = ideal_json(reflexive_product(c.ring(), ds, es), c.names());
  out.verdict = join(out.result["generators"]);
  return out;
}

inline Json rees_json(const ReesSemigroup& b, const std::vector<std::string>& names) {
  ReesReport r = rees_report(b);
  Json j{{"kind", b.kind == ReesKind::ordinary ? "ordinary" : "multi-symbolic"},
         {"generator_count", r.generator_count},
         {"generators", monomials_json(b.generators(), names)},
         {"multidegrees", to_json(r.multidegrees)},
         {"normal", r.normal},
         {"noetherian", r.noetherian}};
  if (r.non_normal_witness) {
    j["witness"] = to_json(*r.non_normal_witness);
    j["witness_monomial"] = monomial_text(*r.non_normal_witness, names);
  }
  if (r.class_group) j["class_group"] = group_text(*r.class_group);
  if (r.canonical_class) j["canonical_class"] = to_json(r.canonical_class->coordinates);
  if (r.quasi_gorenstein) j["quasi_gorenstein"] = *r.quasi_gorenstein;
  if (r.pde) j["pde"] = *r.pde;
  return j;
}

inline TaskOutput run_rees(TaskContext& c) {
  c.allow({"divisors", "ideal"});
  TaskOutput out;
  ReesSemigroup b;
  if (auto ideal = c.task().param("ideal")) {
    if (*ideal != "maximal") throw InvalidInput("ideal must be 'maximal'");
    if (c.task().param("divisors")) throw InvalidInput("give either divisors or ideal, not both");
    b = ordinary_rees(c.ring());
  } else {
    b = build_multi_symbolic_rees(c.ring(), c.divisors("divisors"));
  }
  auto names = with_levels(c.names(), b.k, b.kind == ReesKind::ordinary ? "T" : "U");
  out.result = rees_json(b, names);
  if (b.kind == ReesKind::multi_symbolic && out.result.value("normal", false)) {
    ClassTransfer t = class_group_transfer(c.ring(), b);
    out.result["class_group_isomorphism"] = t.isomorphism;
    out.result["omega_formula"] = t.omega_formula;
  }
  out.verdict = out.result["normal"].get<bool>() ? "normal" : "not-normal";
  return out;
}

inline TaskOutput run_rees_sweep(TaskContext& c) {
  c.allow({"first", "second", "max"});
  long max = c.integer("max", 3);
  if (max < 1) throw InvalidInput("max must be at least 1");
  MonomialDivisor p = c.divisor(c.list("first").front()), q = c.divisor(c.list("second").front());
  TaskOutput out;
  Json cases = Json::array();
  bool diagonal = true;
  for (long n = 1; n <= max; ++n)
    for (long m = 1; m <= max; ++m) {
      std::vector<MonomialDivisor> ds(static_cast<std::size_t>(n), p);
      for (long i = 0; i < m; ++i) ds.push_back(q);
      ReesSemigroup b = build_multi_symbolic_rees(c.ring(), ds);
      AbelianGroupPresentation cl = class_group(b.semigroup);
      DivisorClass omega = class_of(cl, canonical_divisor(b.semigroup));
      ClassTransfer t = class_group_transfer(c.ring(), b);
      if (omega.is_zero() != (n == m)) diagonal = false;
      cases.push_back({{"n", n},
                       {"m", m},
                       {"generators", b.generators().size()},
                       {"class_group", group_text(cl.invariant_factors())},
                       {"canonical_class", to_json(omega.coordinates)},
                       {"quasi_gorenstein", omega.is_zero()},
                       {"omega_formula", t.omega_formula}});
    }
  out.verdict = diagonal ? "gorenstein-iff-diagonal" : "gorenstein-off-diagonal";
  out.result = {{"cases", cases}};
  return out;
}

inline TaskOutput run_cm_check(TaskContext& c) {
  c.allow({"divisors", "max-degree"});
  auto ds = c.divisors("divisors");
  long deg = c.max_degree(6);
  TaskOutput out;
  try {
    CmDecomposition cm = cm_decomposition_check(c.ring(), ds, deg);
    Json counts = Json::array();
    for (const auto& d : cm.counts)
      counts.push_back({{"degree", d.degree}, {"quotient", d.quotient}, {"decomposition", d.decomposition}});
    Json orders = Json::array();
    for (const auto& o : cm.orders) orders.push_back(to_json(o));
    out.result = {{"orders", orders},
                  {"parameters", monomials_json(cm.parameters, with_levels(c.names(), ds.size(), "U"))},
                  {"max_degree", deg},
                  {"counts", counts},
                  {"holds", cm.holds}};
    out.verdict = cm.holds ? "holds" : "fails";
  } catch (const InfiniteOrderClass& e) {
    out.result = {{"applicable", false}, {"message", e.what()}};
    out.verdict = "inapplicable";
  }
  return out;
}

inline TaskOutput run_quasi_gorenstein(TaskContext& c) {
  c.allow({"divisor"});
  auto d = c.divisor(c.list("divisor").front());
  QuasiGorensteinReport r = quasi_gorenstein_check(c.ring(), d);
  TaskOutput out;
  out.result = {{"complement_divisor", to_json(r.complement.coefficients)},
                {"complement_generators", monomials_json(r.complement_generators, c.names())},
                {"rees_generators", r.rees_generator_count},
                {"class_group", group_text(r.class_group_of_r)},
                {"canonical_class", to_json(r.canonical_class_of_r.coordinates)},
                {"quasi_gorenstein", r.quasi_gorenstein}};
  out.verdict = r.quasi_gorenstein ? "quasi-gorenstein" : "not-quasi-gorenstein";
  return out;
}

inline TaskOutput run_iterated_check(TaskContext& c) {
  c.allow({"divisors", "bound"});
  auto ds = c.divisors("divisors");
  long bound = c.integer("bound", 2);
  IteratedCheck it = iterated_isomorphism_check(c.ring(), ds, bound);
  auto names = c.names();
  Json slices = Json::array();
  for (const auto& s : it.slices)
    slices.push_back({{"multidegree", to_json(s.multidegree)},
                      {"direct", monomials_json(s.direct, names)},
                      {"iterated", monomials_json(s.iterated, names)},
                      {"matches", s.matches}});
  TaskOutput out;
  out.result = {{"bound", bound}, {"extended_divisor", to_json(it.extended_divisor.coefficients)}, {"slices", slices}};
  out.verdict = it.matches ? "matches" : "differs";
  return out;
}

/// Presentation images and variable names for a ring target, optionally of A[mT].
inline std::pair<std::vector<IntVector>, std::vector<std::string>> presentation(TaskContext& c) {
  const RingDef& r = c.ring_def();
  auto of = c.task().param("of");
  if (!of) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r.generators.size(); ++i) names.push_back("U" + std::to_string(i + 1));
    return {r.generators, names};
  }
  if (*of != "rees") throw InvalidInput("of must be 'rees'");
  return {examples::rees_presentation_images(r.generators), examples::rees_presentation_names(r.generators.size())};
}

template <class Field>
TaskOutput toric_output(TaskContext& c, const Field& field) {
  auto [images, names] = presentation(c);
  const std::size_t ambient = images.empty() ? 0 : images.front().size();
  auto ideal = toric_ideal(images, ambient, field);
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string(names));
  TaskOutput out;
  out.result = {{"variables", names}, {"weights", ideal.order.weights}, {"generators", gens}};
  out.verdict = gens.empty() ? "0" : join(gens);
  return out;
}

inline TaskOutput run_toric_ideal(TaskContext& c) {
  c.allow({"of", "p"});
  unsigned long p = c.characteristic();
  TaskOutput out = p == 0 ? toric_output(c, RationalField{}) : toric_output(c, PrimeField(p));
  out.result["characteristic"] = p;
  return out;
}

inline TaskOutput run_fedder(TaskContext& c) {
  c.allow({"of", "p"});
  unsigned long p = c.characteristic();
  if (p == 0) throw InvalidInput("fedder needs a prime characteristic (p=, char, or --char)");
  PrimeField field(p);
  TaskOutput out;
  if (const HypersurfaceDef* h = c.scenario().hypersurface(c.task().target)) {
    if (c.task().param("of")) throw InvalidInput("'of' applies to ring targets only");
    PrimePolynomial f = to_field(h->polynomial, field);
    FrobeniusVerdict v = fedder_hypersurface(f, p);
    out.result = examples::verdict_json(v, h->variables);
    out.result["recheck"] = recheck_hypersurface(f, v);
    out.verdict = v.f_pure ? "f-pure" : "not-f-pure";
    return out;
  }
  auto [images, names] = presentation(c);
  const std::size_t ambient = images.front().size();
  auto ideal = toric_ideal(images, ambient, field);
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string(names));
  FrobeniusVerdict v;
  bool recheck = false;
  if (ideal.generators.empty()) {
    // a polynomial ring is regular, hence F-pure
    v.p = p;
    v.f_pure = true;
    v.method = "regular";
    recheck = true;
  } else if (ideal.generators.size() == 1) {
    v = fedder_hypersurface(ideal.generators[0], p);
    recheck = recheck_hypersurface(ideal.generators[0], v);
  } else {
    v = fedder_general(ideal.generators, p, ideal.order.weights);
    recheck = recheck_general(ideal.generators, v, ideal.order.weights);
  }
  out.result = examples::verdict_json(v, names);
  out.result["presentation"] = gens;
  out.result["recheck"] = recheck;
  out.verdict = v.f_pure ? "f-pure" : "not-f-pure";
  return out;
}

inline TaskOutput run_paper_examples_task(TaskContext& c) {
  c.allow({"only"});
  bool ok = true;
  TaskOutput out;
  out.result = {{"checks", run_paper_examples(c.task().param("only"), ok)}};
  out.verdict = ok ? "pass" : "fail";
  out.check_failed = !ok;
  return out;
}

inline TaskOutput dispatch(TaskContext& c) {
  const std::string& k = c.task().kind;
  if (k == "class-group") return run_class_group(c);
  if (k == "normality") return run_normality(c);
  if (k == "a-invariant") return run_a_invariant(c);
  if (k == "symbolic-power") return run_symbolic_power(c);
  if (k == "reflexive-product") return run_reflexive_product(c);
  if (k == "rees") return run_rees(c);
  if (k == "rees-sweep") return run_rees_sweep(c);
  if (k == "cm-check") return run_cm_check(c);
  if (k == "quasi-gorenstein") return run_quasi_gorenstein(c);
  if (k == "iterated-check") return run_iterated_check(c);
  if (k == "toric-ideal") return run_toric_ideal(c);
  if (k == "fedder") return run_fedder(c);
  if (k == "paper-examples") return run_paper_examples_task(c);
  throw InvalidInput("unknown task '" + k + "'");
}

}  // namespace detail

/// Runs the tasks in order. Task errors are recorded in the report and do not
/// stop the run.
inline RunResult run_scenario(const Scenario& s, const RunOptions& options = {}) {
  RunResult out;
  Json tasks = Json::array();
  std::size_t ok = 0, errors = 0, failures = 0;
  for (std::size_t i = 0; i < s.tasks.size(); ++i) {
    const TaskDef& t = s.tasks[i];
    detail::TaskContext ctx(s, t, options);
    Json entry{{"index", i}, {"task", t.kind}, {"line", t.line}};
    entry["target"] = t.target.empty() ? Json(nullptr) : Json(t.target);
    Json params = Json::object();
    for (const auto& [k, v] : t.params) params[k] = v;
    entry["params"] = params;
    entry["definition"] = ctx.definition();
    auto start = std::chrono::steady_clock::now();
    try {
      detail::TaskOutput r = detail::dispatch(ctx);
      entry["verdict"] = r.verdict;
      entry["result"] = r.result;
      bool failed = r.check_failed;
      if (auto expect = t.param("expect"); expect && *expect != r.verdict) {
        failed = true;
        entry["expected"] = *expect;
      }
      entry["status"] = failed ? "check-failed" : "ok";
      (failed ? failures : ok) += 1;
    } catch (const std::exception& e) {
      entry["status"] = "error";
      entry["error"] = e.what();
      ++errors;
    }
    entry["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    tasks.push_back(std::move(entry));
  }
  out.report = {{"schema", report_schema}, {"version", tool_version}};
  out.report["characteristic"] = options.characteristic   ? Json(*options.characteristic)
                                 : s.characteristic       ? Json(*s.characteristic)
                                                          : Json(nullptr);
  out.report["tasks"] = tasks;
  out.report["summary"] = {{"tasks", s.tasks.size()}, {"ok", ok}, {"check_failures", failures}, {"errors", errors}};
  out.exit_code = failures ? 1 : errors ? 2 : 0;
  return out;
}

}  // namespace torees::cli
