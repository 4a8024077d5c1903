#include "pdme/parse.hpp"

#include <cctype>
#include <string>

#include "pdme/errors.hpp"

namespace pdme {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const RingPtr& ring;

  explicit Parser(std::string_view t, const RingPtr& r) : text(t), ring(r) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  std::string read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", pos);
    return std::string(text.substr(start, pos - start));
  }

  std::int64_t read_exponent() {
    bool neg = accept('-');
    std::string digits = read_integer();
    try {
      std::int64_t e = std::stoll(digits);
      return neg ? -e : e;
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", pos);
    }
  }

  Poly parse_expr() {
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Poly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) acc += parse_term();
      else if (accept('-')) acc -= parse_term();
      else break;
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (accept('*')) acc = acc * parse_factor();
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    if (accept('^')) {
      std::size_t at = pos;
      std::int64_t e = read_exponent();
      if (e >= 0) return base.pow(static_cast<std::uint64_t>(e));
      if (!base.is_unit_monomial())
        throw ParseError("negative exponent on a non-invertible base", at);
      return base.unit_inverse().pow(static_cast<std::uint64_t>(-e));
    }
    return base;
  }

  Poly parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Poly inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '-') {
      ++pos;
      return -parse_atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_integer();
      if (accept('/')) {
        std::string den = read_integer();
        return Poly::constant(ring, Scalar::from_string(num + "/" + den));
      }
      return Poly::constant(ring, Scalar::from_string(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      auto idx = ring->index(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Poly::variable(ring, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

} // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
  Parser p(text, ring);
  Poly result = p.parse_expr();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  return result;
}

} // namespace pdme
