#include <doctest.h>

#include <random>

#include "qe/error.hpp"
#include "qe/parse.hpp"
#include "qe/poly.hpp"
#include "support.hpp"

using namespace qe;

namespace {

RingElement el(const char* text) { return parse_element(text); }

RingElement random_element(std::mt19937_64& rng) {
  return RingElement::normalize(qe::testing::random_poly(rng, 3, 9), 1 + static_cast<long>(rng() % 12));
}

}  // namespace

TEST_CASE("normalize") {
  const RingElement a = RingElement::normalize(IntPoly{4, 2}, 6);
  CHECK(a.numerator() == IntPoly{2, 1});
  CHECK(a.denominator() == 3);
  const RingElement z = RingElement::normalize(IntPoly{}, 5);
  CHECK(z.is_zero());
  CHECK(z.denominator() == 1);
  const RingElement c = RingElement::normalize(IntPoly{0, 3}, 2);
  CHECK(c.numerator() == IntPoly{0, 3});
  CHECK(c.denominator() == 2);
  CHECK_THROWS_AS(RingElement::normalize(IntPoly{1}, 0), PreconditionError);
  CHECK_THROWS_AS(RingElement::normalize(IntPoly{1}, -2), PreconditionError);
}

TEST_CASE("degree and leading coefficient conventions") {
  CHECK(RingElement().degree() == -1);
  CHECK(RingElement().lc() == 0);
  CHECK(el("3/2*x^2 - x + 5").lc() == mpq_class(3, 2));
  CHECK(el("3/2*x^2 - x + 5").degree() == 2);
}

TEST_CASE("arithmetic") {
  CHECK(el("x/2") + el("x/2") == el("x"));
  CHECK(el("x + 1") * el("x - 1") == el("x^2 - 1"));
  const RingElement d = el("(x^2 + x)/2") - el("x/2");
  CHECK(d.numerator() == IntPoly{0, 0, 1});
  CHECK(d.denominator() == 2);
  CHECK(-el("x/3") == el("-x/3"));
}

TEST_CASE("discrete order") {
  CHECK(compare(RingElement::x(), 2) == Sign::positive);
  CHECK(compare(el("x/2"), el("x/2")) == Sign::zero);
  CHECK(compare(2, 3) == Sign::negative);
  CHECK(el("x - 1000000") > RingElement(mpz_class("99999999999999")));
  CHECK(el("-x^2") < el("-1000*x"));
  CHECK(abs(el("1 - x")) == el("x - 1"));
  CHECK(abs(RingElement(-4)) == 4);
}

TEST_CASE("qdiv") {
  auto check = [](const char* q, const char* r, const char* quot, const char* rem) {
    const QuotRem d = qdiv(el(q), el(r));
    CHECK(d.quotient == el(quot));
    CHECK(d.remainder == el(rem));
  };
  check("x^2 + 1", "x", "x", "1");
  check("x", "2", "x/2", "0");
  check("2*x^2 + x", "x + 1", "2*x - 1", "1");
  // (2x - 1)(x + 1) + 1 = 2x^2 + x
  CHECK((el("2*x - 1") * el("x + 1")) + 1 == el("2*x^2 + x"));
  CHECK_THROWS_AS(qdiv(el("x"), 0), DivisionByZero);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const RingElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    CHECK(a - b == a + (-b));
  }
}

TEST_CASE("order is compatible with the ring operations") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const RingElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    // Trichotomy.
    CHECK(int(a < b) + int(a == b) + int(a > b) == 1);
    if (a > b) {
      CHECK(a + c > b + c);
      if (c > 0) CHECK(a * c > b * c);
    }
  }
}

TEST_CASE("integers embed discretely") {
  for (long n = -20; n <= 20; ++n) {
    // No integer m with n < m < n + 1.
    for (long m = -25; m <= 25; ++m) CHECK_FALSE((RingElement(n) < m && RingElement(m) < n + 1));
    CHECK(RingElement(n) < RingElement::x());
  }
}

TEST_CASE("qdiv round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const RingElement q = random_element(rng);
    const RingElement r = random_element(rng);
    if (r.is_zero()) continue;
    const QuotRem d = qdiv(q, r);
    CHECK(d.quotient * r + d.remainder == q);
    CHECK(d.remainder.degree() < r.degree());
  }
}

TEST_CASE("rational gcd over Q") {
  CHECK(rational_gcd(IntPoly{-1, 0, 1}, IntPoly{2, 2}) == IntPoly{1, 1});
  CHECK(rational_gcd(IntPoly{-2, 0, 1}, IntPoly{0, 1}) == IntPoly{1});
  CHECK(rational_gcd(IntPoly{0, 6}, IntPoly{}) == IntPoly{0, 1});
}

TEST_CASE("parser and printer") {
  CHECK(el("3/2*x^2 - x + 5") == RingElement::normalize(IntPoly{10, -2, 3}, 2));
  CHECK(el("5(x - 1)/3") == RingElement::normalize(IntPoly{-5, 5}, 3));
  CHECK(el("3x") == RingElement::normalize(IntPoly{0, 3}, 1));
  CHECK(el("-(x^2+x)/2") == RingElement::normalize(IntPoly{0, -1, -1}, 2));
  CHECK(el("x^0") == 1);
  CHECK(to_string(el("x/2")) == "x/2");
  CHECK(to_string(el("(x^2 + x)/2")) == "(x^2 + x)/2");
  CHECK(to_string(el("-5*x/3")) == "-5*x/3");
  CHECK(to_string(RingElement()) == "0");
  CHECK(parse_int_poly("x^2 - 2") == IntPoly{-2, 0, 1});

  CHECK_THROWS_AS(parse_element("x +"), ParseError);
  CHECK_THROWS_AS(parse_element("x/(x+1)"), ParseError);
  CHECK_THROWS_AS(parse_element("x/0"), ParseError);
  CHECK_THROWS_AS(parse_element("y"), ParseError);
  CHECK_THROWS_AS(parse_int_poly("x/2"), ParseError);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const RingElement e = random_element(rng);
    CHECK(parse_element(to_string(e)) == e);
  }
}
