#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "starpi/grassmann.hpp"
#include "starpi/poly.hpp"

namespace starpi {

struct ParseError : std::runtime_error {
  size_t line;
  size_t column;
  ParseError(const std::string& msg, size_t line_, size_t column_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

namespace detail {

// Shared cursor with 1-based line/column tracking.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    advance();
    return c;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool take_if(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  // Digits only; no sign here.
  uint64_t integer() {
    skip_ws();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + uint64_t(text_[pos_] - '0');
      if (v > 1'000'000'000'000ull) fail("integer literal too large");
      advance();
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t col_ = 1;
};

// Grammar:
//   poly   := '0' | ['-'] term (('+'|'-') term)*
//   term   := [coef '*'] factor ('*' factor)*
//   factor := atom ["'"]
//   atom   := var | '(' poly ')' | '[' poly ',' poly ']'
//   var    := ('y'|'z') integer ['@' (0|1|2|3)]
//   coef   := integer ['/' integer]
// A prime is the involution, brackets are the commutator [p,q] = pq - qp.
// "0" (also usable as a term) denotes the zero polynomial, which the free
// algebra needs a name for even though it is no word.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : c_(text) {}

  StarPolynomial parse() {
    StarPolynomial p = poly();
    if (!c_.at_end()) c_.fail("trailing input");
    return p;
  }

  Variable parse_single_variable() {
    if (c_.peek() != 'y' && c_.peek() != 'z') c_.fail("expected a variable");
    Variable v = variable();
    if (!c_.at_end()) c_.fail("trailing input");
    return v;
  }

 private:
  StarPolynomial poly() {
    StarPolynomial p;
    bool negate = c_.take_if('-');
    p += term() * Rational(negate ? -1 : 1);
    while (true) {
      if (c_.take_if('+'))
        p += term();
      else if (c_.take_if('-'))
        p -= term();
      else
        return p;
    }
  }

  StarPolynomial term() {
    Rational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c_.peek()))) {
      coef = coefficient();
      have_coef = true;
    }
    if (have_coef && c_.peek() != '*') {
      if (coef == 0) return StarPolynomial();  // the zero literal
      c_.fail("a bare coefficient needs a factor: write c*factor");
    }
    if (have_coef) c_.expect('*');

    StarPolynomial p = factor();
    while (c_.peek() == '*') {
      c_.expect('*');
      p = p * factor();
    }
    return p * coef;
  }

  StarPolynomial factor() {
    StarPolynomial p = atom();
    if (c_.take_if('\'')) p = involute(p);
    return p;
  }

  StarPolynomial atom() {
    const char c = c_.peek();
    if (c == '(') {
      c_.expect('(');
      StarPolynomial p = poly();
      c_.expect(')');
      return p;
    }
    if (c == '[') {
      c_.expect('[');
      StarPolynomial p = poly();
      c_.expect(',');
      StarPolynomial q = poly();
      c_.expect(']');
      return p * q - q * p;
    }
    if (c == 'y' || c == 'z') return StarPolynomial::var(variable());
    c_.fail("expected a variable, '(' or '['");
  }

  Variable variable() {
    const char c = c_.take();
    const VarKind kind = (c == 'y') ? VarKind::Sym : VarKind::Skew;
    const uint64_t index = c_.integer();
    if (index == 0) c_.fail("variable index must be positive");
    if (index > 0xffffffffull) c_.fail("variable index too large");
    if (c_.take_if('@')) {
      const uint64_t g = c_.integer();
      if (g > 3) c_.fail("grade must be one of 0,1,2,3");
      return Variable::make(kind, uint32_t(index), Z4(unsigned(g)));
    }
    return Variable::make(kind, uint32_t(index), std::nullopt);
  }

  Rational coefficient() {
    const uint64_t num = c_.integer();
    if (c_.take_if('/')) {
      const uint64_t den = c_.integer();
      if (den == 0) c_.fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Cursor c_;
};

}  // namespace detail

inline StarPolynomial parse_poly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

inline Variable parse_variable(std::string_view text) {
  return detail::PolyParser(text).parse_single_variable();
}

// Grassmann expressions over a fixed truncation:
//   gpoly   := '0' | ['-'] gterm (('+'|'-') gterm)*
//   gterm   := [coef '*'] gfactor ('*' gfactor)*
//   gfactor := 'e' '{' [integer (',' integer)*] '}'
// Repeated or unsorted generators inside one product are fine; the factors
// multiply out.
inline GrassmannElement parse_grassmann(std::string_view text, uint32_t n_generators) {
  detail::Cursor c(text);

  auto gfactor = [&]() -> GrassmannElement {
    c.expect('e');
    c.expect('{');
    GrassmannElement g = GrassmannElement::unit(n_generators);
    if (c.peek() != '}') {
      while (true) {
        const uint64_t i = c.integer();
        if (i == 0 || i > n_generators) c.fail("generator index out of range");
        g = g_mul(g, GrassmannElement::basis(n_generators, uint32_t(1) << (i - 1)));
        if (!c.take_if(',')) break;
      }
    }
    c.expect('}');
    return g;
  };

  auto gterm = [&]() -> GrassmannElement {
    Rational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      uint64_t num = c.integer();
      if (c.take_if('/')) {
        const uint64_t den = c.integer();
        if (den == 0) c.fail("zero denominator");
        coef = Rational(num, den);
        coef.canonicalize();
      } else {
        coef = Rational(num);
      }
      have_coef = true;
    }
    if (have_coef && c.peek() != '*') {
      if (coef == 0) return GrassmannElement(n_generators);
      c.fail("a bare coefficient needs a factor: write c*e{..}");
    }
    if (have_coef) c.expect('*');

    GrassmannElement g = gfactor();
    while (c.peek() == '*') {
      c.expect('*');
      g = g_mul(g, gfactor());
    }
    return g * coef;
  };

  GrassmannElement out(n_generators);
  const bool negate = c.take_if('-');
  out += gterm() * Rational(negate ? -1 : 1);
  while (true) {
    if (c.take_if('+'))
      out += gterm();
    else if (c.take_if('-'))
      out -= gterm();
    else
      break;
  }
  if (!c.at_end()) c.fail("trailing input");
  return out;
}

}  // namespace starpi
