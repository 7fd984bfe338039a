#include "qe/parse.hpp"

#include <cctype>
#include <string>

namespace qe {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingElement parse() {
    RingElement e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  RingElement expr() {
    RingElement acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RingElement term() {
    RingElement acc = unary();
    for (;;) {
      const char c = peek();
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        const RingElement d = unary();
        if (d.degree() != 0) fail("division by a non-constant or zero");
        acc = scale(acc, 1 / d.lc());
      } else if (c == '(' || c == 'x') {
        acc *= power();  // juxtaposition, as in 5(x - 1) or 3x
      } else {
        return acc;
      }
    }
  }

  RingElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RingElement power() {
    RingElement base = atom();
    if (!eat('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (n > 10'000) fail("exponent too large");
    RingElement out = 1;
    for (unsigned long i = 0; i < n; ++i) out *= base;
    return out;
  }

  RingElement atom() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return RingElement::x();
    }
    if (eat('(')) {
      RingElement e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RingElement(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_element(std::string_view text) { return Parser(text).parse(); }

IntPoly parse_int_poly(std::string_view text) {
  const RingElement e = parse_element(text);
  if (e.denominator() != 1) throw ParseError("\"" + std::string(text) + "\" does not have integer coefficients");
  return e.numerator();
}

}  // namespace qe
