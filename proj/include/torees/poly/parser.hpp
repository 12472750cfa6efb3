#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "torees/poly/polynomial.hpp"

namespace torees {

/// Syntax error with a 1-based position.
struct ParseError : InvalidInput {
  std::size_t line, column;
  ParseError(const std::string& what, std::size_t line_no, std::size_t col)
      : InvalidInput("line " + std::to_string(line_no) + ", column " + std::to_string(col) + ": " + what),
        line(line_no),
        column(col) {}
};

/// Recursive-descent parser for text such as `3*U0^2 - U1*U2*(U3 + 1/2)`.
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := power ('*' power)*
///   power   := primary ['^' digits]
///   primary := digits ['/' digits] | name | '(' expr ')'
class PolynomialParser {
 public:
  PolynomialParser(std::vector<std::string> names, std::size_t line = 1, std::size_t column_offset = 0)
      : names_(std::move(names)), line_(line), offset_(column_offset) {}

  RationalPolynomial parse(const std::string& text) {
    text_ = text;
    pos_ = 0;
    RationalPolynomial p = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  std::vector<std::string> names_;
  std::size_t line_, offset_;
  std::string text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, offset_ + pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalPolynomial constant(const Rational& c) const {
    return RationalPolynomial::constant(RationalField{}, names_.size(), c);
  }

  Integer digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(text_.substr(start, pos_ - start));
  }

  RationalPolynomial expr() {
    skip();
    bool negative = false;
    if (eat('-')) negative = true;
    else eat('+');
    RationalPolynomial acc = term();
    if (negative) acc = acc.scaled(Rational(-1));
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  RationalPolynomial term() {
    RationalPolynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  RationalPolynomial power() {
    RationalPolynomial base = primary();
    if (eat('^')) {
      skip();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected an exponent after '^'");
      Integer e = digits();
      if (!e.fits_ulong_p() || e > 100000) fail("exponent too large");
      return base.pow(e.get_ui());
    }
    return base;
  }

  RationalPolynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalPolynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(digits());
      if (eat('/')) {
        std::size_t at = pos_;
        Integer d = digits();
        if (d == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        q /= Rational(d);
        q.canonicalize();
      }
      return constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return RationalPolynomial::variable(RationalField{}, names_.size(), i);
      pos_ = start;
      fail("undefined variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

inline RationalPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  return PolynomialParser(names).parse(text);
}

}  // namespace torees
