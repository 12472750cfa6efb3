#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torees/poly/parser.hpp"
#include "torees/semigroup.hpp"

namespace torees::cli {

struct RingDef {
  std::string name;
  std::vector<std::string> variables;
  std::vector<IntVector> generators;  // in the order written
  std::vector<std::string> generator_text;
  std::optional<GradingVector> grading;
  std::size_t line = 0;
};

struct HypersurfaceDef {
  std::string name;
  std::vector<std::string> variables;
  std::vector<long> weights;
  RationalPolynomial polynomial{RationalField{}, 0};
  std::string text;
  std::size_t line = 0;
};

struct PrimeDef {
  std::string name, ring;
  std::vector<IntVector> monomials;
  std::vector<std::string> monomial_text;
  std::size_t line = 0;
};

struct DivisorDef {
  std::string name, ring;
  std::vector<std::pair<long, std::string>> terms;  // coefficient, prime or divisor name
  std::string text;
  std::size_t line = 0;
};

struct TaskDef {
  std::string kind;
  std::string target;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t line = 0;

  std::optional<std::string> param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    return std::nullopt;
  }
};

struct Scenario {
  std::optional<unsigned long> characteristic;
  std::vector<RingDef> rings;
  std::vector<HypersurfaceDef> hypersurfaces;
  std::vector<PrimeDef> primes;
  std::vector<DivisorDef> divisors;
  std::vector<TaskDef> tasks;

  const RingDef* ring(const std::string& n) const {
    for (const auto& r : rings)
      if (r.name == n) return &r;
    return nullptr;
  }
  const HypersurfaceDef* hypersurface(const std::string& n) const {
    for (const auto& h : hypersurfaces)
      if (h.name == n) return &h;
    return nullptr;
  }
  const PrimeDef* prime(const std::string& n) const {
    for (const auto& p : primes)
      if (p.name == n) return &p;
    return nullptr;
  }
  const DivisorDef* divisor(const std::string& n) const {
    for (const auto& d : divisors)
      if (d.name == n) return &d;
    return nullptr;
  }
};

inline const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> kinds{
      "class-group", "normality",  "a-invariant",     "symbolic-power", "reflexive-product",
      "rees",        "rees-sweep", "cm-check",        "quasi-gorenstein", "iterated-check",
      "toric-ideal", "fedder",     "paper-examples"};
  return kinds;
}

namespace detail {

/// Cursor over one scenario line with 1-based column reporting.
class LineCursor {
 public:
  LineCursor(std::string text, std::size_t line) : text_(std::move(text)), line_(line) {}

  [[noreturn]] void fail(const std::string& what, std::optional<std::size_t> at = std::nullopt) const {
    throw ParseError(what, line_, (at ? *at : pos_) + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  const std::string& text() const { return text_; }
  std::size_t line() const { return line_; }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '[' &&
           text_[pos_] != ']' && text_[pos_] != '=')
      ++pos_;
    if (start == pos_) fail("expected a word");
    return text_.substr(start, pos_ - start);
  }

  std::string identifier(const std::string& what) {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected " + what);
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect_keyword(const std::string& kw) {
    std::size_t at = (skip(), pos_);
    if (word() != kw) fail("expected '" + kw + "'", at);
  }

  long integer(const std::string& what) {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string s = text_.substr(start, pos_ - start);
    if (s.empty() || s == "-" || s == "+") fail("expected " + what, start);
    try {
      return std::stol(s);
    } catch (const std::exception&) {
      fail(what + " out of range", start);
    }
  }

  /// Rest of the line from the cursor, with its starting column.
  std::pair<std::string, std::size_t> rest() {
    skip();
    std::size_t start = pos_;
    pos_ = text_.size();
    return {text_.substr(start), start};
  }

 private:
  std::string text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string> variable_list(LineCursor& c) {
  c.expect('[');
  std::vector<std::string> vars;
  std::set<std::string> seen;
  while (!c.peek(']')) {
    if (c.done()) c.fail("unterminated variable list");
    std::size_t at = (c.skip(), c.pos());
    std::string v = c.identifier("a variable name");
    if (!seen.insert(v).second) c.fail("duplicate variable '" + v + "'", at);
    vars.push_back(v);
  }
  c.expect(']');
  if (vars.empty()) c.fail("empty variable list");
  return vars;
}

/// Comma-separated monomials with coefficient 1; returns exponent vectors and text.
inline std::pair<std::vector<IntVector>, std::vector<std::string>> monomial_list(
    const std::string& text, std::size_t column, std::size_t line, const std::vector<std::string>& vars) {
  std::vector<IntVector> out;
  std::vector<std::string> words;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t lead = piece.find_first_not_of(" \t");
    std::size_t offset = column + start + (lead == std::string::npos ? 0 : lead);
    if (lead == std::string::npos) throw ParseError("expected a monomial", line, offset + 1);
    std::string trimmed = piece.substr(lead);
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    RationalPolynomial p = PolynomialParser(vars, line, offset).parse(trimmed);
    if (p.size() != 1 || p.terms().begin()->second != 1)
      throw ParseError("expected a monomial with coefficient 1", line, offset + 1);
    IntVector e;
    for (auto x : p.terms().begin()->first) e.push_back(Integer(x));
    out.push_back(std::move(e));
    words.push_back(trimmed);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {out, words};
}

}  // namespace detail

/// Parses the line-oriented scenario format; see docs/scenario-grammar.md.
inline Scenario parse_scenario(const std::string& text) {
  using detail::LineCursor;
  Scenario s;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  auto claim = [&](LineCursor& c, const std::string& name, std::size_t at) {
    if (!names.insert(name).second) c.fail("name '" + name + "' is already defined", at);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    LineCursor c(raw, line_no);
    if (c.done()) continue;
    std::size_t kw_at = c.pos();
    std::string kw = c.word();
    if (kw == "char") {
      std::size_t at = (c.skip(), c.pos());
      long p = c.integer("a characteristic");
      if (p < 0 || (p != 0 && !is_prime_number(static_cast<unsigned long>(p))))
        c.fail("characteristic must be 0 or a prime", at);
      if (s.characteristic) c.fail("characteristic already set", kw_at);
      s.characteristic = static_cast<unsigned long>(p);
      if (!c.done()) c.fail("unexpected text after characteristic");
    } else if (kw == "ring") {
      RingDef r;
      r.line = line_no;
      std::size_t at = (c.skip(), c.pos());
      r.name = c.identifier("a ring name");
      claim(c, r.name, at);
      r.variables = detail::variable_list(c);
      c.expect('=');
      auto [body, col] = c.rest();
      std::string gens = body;
      std::size_t gpos = body.find(" grading ");
      if (gpos != std::string::npos) gens = body.substr(0, gpos);
      auto [vecs, words] = detail::monomial_list(gens, col, line_no, r.variables);
      r.generators = vecs;
      r.generator_text = words;
      if (gpos != std::string::npos) {
        LineCursor gc(std::string(col + gpos + 9, ' ') + body.substr(gpos + 9), line_no);
        GradingVector grading;
        while (!gc.done() && !gc.peek('/')) grading.weights.push_back(Integer(gc.integer("a weight")));
        if (gc.peek('/')) {
          gc.expect('/');
          std::size_t dat = (gc.skip(), gc.pos());
          long den = gc.integer("a denominator");
          if (den <= 0) gc.fail("denominator must be positive", dat);
          grading.denominator = den;
        }
        if (!gc.done()) gc.fail("unexpected text after grading");
        if (grading.weights.size() != r.variables.size()) gc.fail("one weight per variable required", col + gpos + 1);
        r.grading = grading;
      }
      s.rings.push_back(std::move(r));
    } else if (kw == "hypersurface") {
      HypersurfaceDef h;
      h.line = line_no;
      std::size_t at = (c.skip(), c.pos());
      h.name = c.identifier("a hypersurface name");
      claim(c, h.name, at);
      h.variables = detail::variable_list(c);
      c.expect_keyword("weights");
      while (!c.peek('=')) {
        if (c.done()) c.fail("expected '='");
        std::size_t wat = (c.skip(), c.pos());
        long w = c.integer("a weight");
        if (w <= 0) c.fail("weights must be positive", wat);
        h.weights.push_back(w);
      }
      if (h.weights.size() != h.variables.size()) c.fail("one weight per variable required");
      c.expect('=');
      auto [body, col] = c.rest();
      if (body.empty()) c.fail("expected a polynomial");
      h.polynomial = PolynomialParser(h.variables, line_no, col).parse(body);
      h.text = body;
      s.hypersurfaces.push_back(std::move(h));
    } else if (kw == "prime") {
      PrimeDef p;
      p.line = line_no;
      std::size_t at = (c.skip(), c.pos());
      p.name = c.identifier("a prime name");
      claim(c, p.name, at);
      c.expect_keyword("on");
      std::size_t rat = (c.skip(), c.pos());
      p.ring = c.identifier("a ring name");
      const RingDef* r = s.ring(p.ring);
      if (!r) c.fail("undefined ring '" + p.ring + "'", rat);
      c.expect('=');
      auto [body, col] = c.rest();
      auto [vecs, words] = detail::monomial_list(body, col, line_no, r->variables);
      p.monomials = vecs;
      p.monomial_text = words;
      s.primes.push_back(std::move(p));
    } else if (kw == "divisor") {
      DivisorDef d;
      d.line = line_no;
      std::size_t at = (c.skip(), c.pos());
      d.name = c.identifier("a divisor name");
      claim(c, d.name, at);
      c.expect_keyword("on");
      std::size_t rat = (c.skip(), c.pos());
      d.ring = c.identifier("a ring name");
      if (!s.ring(d.ring)) c.fail("undefined ring '" + d.ring + "'", rat);
      c.expect('=');
      d.text = raw.substr((c.skip(), c.pos()));
      bool first = true;
      while (!c.done()) {
        long sign = 1;
        if (c.peek('+')) {
          c.expect('+');
        } else if (c.peek('-')) {
          c.expect('-');
          sign = -1;
        } else if (!first) {
          c.fail("expected '+' or '-'");
        }
        first = false;
        long coeff = 1;
        c.skip();
        if (c.pos() < c.text().size() && std::isdigit(static_cast<unsigned char>(c.text()[c.pos()]))) {
          coeff = c.integer("a coefficient");
          c.expect('*');
        }
        std::size_t nat = (c.skip(), c.pos());
        std::string ref = c.identifier("a prime or divisor name");
        const PrimeDef* p = s.prime(ref);
        const DivisorDef* q = s.divisor(ref);
        if (!p && !q) c.fail("undefined prime or divisor '" + ref + "'", nat);
        if ((p && p->ring != d.ring) || (q && q->ring != d.ring)) c.fail("'" + ref + "' lives on another ring", nat);
        d.terms.emplace_back(sign * coeff, ref);
      }
      if (d.terms.empty()) c.fail("empty divisor");
      s.divisors.push_back(std::move(d));
    } else if (kw == "task") {
      TaskDef t;
      t.line = line_no;
      std::size_t kat = (c.skip(), c.pos());
      t.kind = c.word();
      const auto& kinds = task_kinds();
      if (std::find(kinds.begin(), kinds.end(), t.kind) == kinds.end()) c.fail("unknown task '" + t.kind + "'", kat);
      while (!c.done()) {
        std::size_t wat = c.pos();
        std::string w = c.word();
        if (c.peek('=')) {
          c.expect('=');
          c.skip();
          std::size_t vat = c.pos();
          std::size_t end = vat;
          while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
          if (end == vat) c.fail("expected a value after '='");
          std::string v = raw.substr(vat, end - vat);
          for (const auto& [k, old] : t.params)
            if (k == w) c.fail("parameter '" + w + "' given twice", wat);
          t.params.emplace_back(w, v);
          c.seek(end);
        } else {
          if (!t.target.empty()) c.fail("unexpected '" + w + "'", wat);
          if (!t.params.empty()) c.fail("the target must come before parameters", wat);
          if (!s.ring(w) && !s.hypersurface(w)) c.fail("undefined ring or hypersurface '" + w + "'", wat);
          t.target = w;
        }
      }
      if (t.target.empty() && t.kind != "paper-examples") c.fail("task needs a target ring", kat);
      s.tasks.push_back(std::move(t));
    } else {
      c.fail("unknown statement '" + kw + "'", kw_at);
    }
  }
  return s;
}

}  // namespace torees::cli
