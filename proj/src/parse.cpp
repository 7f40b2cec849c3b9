#include "arakelov/parse.hpp"

#include <cctype>
#include <string>

#include "arakelov/error.hpp"

namespace arakelov {

namespace {

constexpr unsigned kMaxExponent = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BiPoly parse() {
    BiPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        BiPoly divisor = unary();
        if (!divisor.is_univariate_t() || !divisor.as_poly_t().is_constant()) {
          throw ParseError(at, "division is only allowed by a constant");
        }
        if (divisor.is_zero()) throw ParseError(at, "division by zero");
        const Rational inv = Rational(1) / divisor.as_poly_t().coeff(0);
        acc = acc * BiPoly(Poly(inv));
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) {
        throw ParseError(start, "exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  BiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BiPoly(Poly(Rational(mpz_class(std::string(text_.substr(start, pos_ - start))), 1)));
    }
    if (c == 't') {
      ++pos_;
      return BiPoly::t_variable();
    }
    if (c == 's') {
      ++pos_;
      return BiPoly::s_variable();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return Parser(text).parse(); }

Poly parse_poly(std::string_view text, char var) {
  const BiPoly b = parse_bipoly(text);
  if (var == 's') {
    if (!b.is_univariate_s()) {
      throw ParseError(text.find('t') == std::string_view::npos ? 0 : text.find('t'),
                       "variable 't' not allowed here");
    }
    return b.as_poly_s();
  }
  if (!b.is_univariate_t()) {
    throw ParseError(text.find('s') == std::string_view::npos ? 0 : text.find('s'),
                     "variable 's' not allowed here");
  }
  return b.as_poly_t();
}

}  // namespace arakelov
