#include "qe/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qe/error.hpp"

namespace qe {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::lc() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }

mpz_class IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly IntPoly::divexact(const mpz_class& d) const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

namespace {

using RatCoeffs = std::vector<mpq_class>;

void trim(RatCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Long division in Q[x]; r must be nonzero.
std::pair<RatCoeffs, RatCoeffs> long_divide(RatCoeffs num, const RatCoeffs& den) {
  RatCoeffs quot;
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() > dd) quot.resize(num.size() - dd);
  while (num.size() > dd && !num.empty()) {
    const std::size_t shift = num.size() - 1 - dd;
    mpq_class factor = num.back() / den.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i <= dd; ++i) num[shift + i] -= factor * den[i];
    trim(num);
  }
  trim(quot);
  return {std::move(quot), std::move(num)};
}

RatCoeffs to_rational(const IntPoly& h) {
  RatCoeffs out(h.coeffs().begin(), h.coeffs().end());
  return out;
}

IntPoly primitive_part(const RatCoeffs& c) {
  mpz_class l = 1;
  for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(c.size());
  for (const auto& q : c) ints.emplace_back(q.get_num() * (l / q.get_den()));
  IntPoly h(std::move(ints));
  if (h.is_zero()) return h;
  h = h.divexact(h.content());
  if (h.lc() < 0) h = -h;
  return h;
}

}  // namespace

IntPoly rational_gcd(const IntPoly& a, const IntPoly& b) {
  RatCoeffs x = to_rational(a);
  RatCoeffs y = to_rational(b);
  while (!y.empty()) {
    auto rem = long_divide(x, y).second;
    x = std::move(y);
    y = std::move(rem);
  }
  return primitive_part(x);
}

RingElement::RingElement(long v) : num_(IntPoly{v}), den_(1) {}

RingElement::RingElement(const mpz_class& v) : num_(IntPoly::constant(v)), den_(1) {}

RingElement RingElement::normalize(IntPoly h, mpz_class n) {
  if (n <= 0) throw PreconditionError("denominator must be positive");
  if (h.is_zero()) return RingElement(IntPoly{}, mpz_class(1));
  mpz_class g;
  const mpz_class c = h.content();
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
  if (g != 1) {
    h = h.divexact(g);
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  }
  return RingElement(std::move(h), std::move(n));
}

RingElement RingElement::from_rationals(std::span<const mpq_class> coeffs) {
  mpz_class l = 1;
  for (const auto& q : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs.size());
  for (const auto& q : coeffs) ints.emplace_back(q.get_num() * (l / q.get_den()));
  return normalize(IntPoly(std::move(ints)), l);
}

mpq_class RingElement::lc() const {
  mpq_class q(num_.lc(), den_);
  q.canonicalize();
  return q;
}

mpq_class RingElement::coeff(std::size_t i) const {
  mpq_class q(num_.coeff(i), den_);
  q.canonicalize();
  return q;
}

std::vector<mpq_class> RingElement::rational_coeffs() const {
  std::vector<mpq_class> out;
  out.reserve(num_.coeffs().size());
  for (std::size_t i = 0; i < num_.coeffs().size(); ++i) out.push_back(coeff(i));
  return out;
}

Sign RingElement::sign() const {
  const int s = sgn(num_.lc());
  return s > 0 ? Sign::positive : s < 0 ? Sign::negative : Sign::zero;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  *this = normalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  *this = normalize(num_ * o.num_, den_ * o.den_);
  return *this;
}

RingElement operator-(RingElement a) {
  a.num_ = -a.num_;
  return a;
}

std::strong_ordering operator<=>(const RingElement& a, const RingElement& b) {
  switch ((a - b).sign()) {
    case Sign::negative:
      return std::strong_ordering::less;
    case Sign::positive:
      return std::strong_ordering::greater;
    default:
      return std::strong_ordering::equal;
  }
}

Sign compare(const RingElement& a, const RingElement& b) { return (a - b).sign(); }

RingElement abs(const RingElement& a) { return a.sign() == Sign::negative ? -a : a; }

RingElement scale(const RingElement& a, const mpq_class& c) {
  return RingElement::normalize(a.numerator() * mpz_class(c.get_num()), a.denominator() * c.get_den());
}

QuotRem qdiv(const RingElement& q, const RingElement& r) {
  if (r.is_zero()) throw DivisionByZero();
  auto [quot, rem] = long_divide(q.rational_coeffs(), r.rational_coeffs());
  return {RingElement::from_rationals(quot), RingElement::from_rationals(rem)};
}

std::string to_string(const IntPoly& h) {
  if (h.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = h.degree(); d >= 0; --d) {
    const mpz_class& c = h.coeffs()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const mpz_class mag = ::abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 'x';
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

std::string to_string(const RingElement& e) {
  const std::string num = to_string(e.numerator());
  if (e.denominator() == 1) return num;
  const auto terms = std::count_if(e.numerator().coeffs().begin(), e.numerator().coeffs().end(),
                                   [](const mpz_class& c) { return c != 0; });
  if (terms == 1) return num + "/" + e.denominator().get_str();
  return "(" + num + ")/" + e.denominator().get_str();
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative:
      return "negative";
    case Sign::positive:
      return "positive";
    default:
      return "zero";
  }
}

}  // namespace qe
