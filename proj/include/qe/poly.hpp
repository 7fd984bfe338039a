#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qe {

/// Polynomial in Z[x], coefficients little-endian (constant term first),
/// never carrying trailing zeros. deg 0 = -1 and lc(0) = 0.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  mpz_class lc() const;
  /// Coefficient of x^i, zero past the degree.
  mpz_class coeff(std::size_t i) const;
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
  mpz_class content() const;
  IntPoly derivative() const;
  mpz_class eval(const mpz_class& t) const;

  /// Exact division of every coefficient; d must divide the content.
  IntPoly divexact(const mpz_class& d) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator*(const mpz_class& c, IntPoly a) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Primitive generator (positive leading coefficient) of the ideal (a, b) in
/// Q[x], as an integer polynomial. Zero when both inputs are zero.
IntPoly rational_gcd(const IntPoly& a, const IntPoly& b);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Element h/n of Q[x], kept in normal form gcd(content(h), n) = 1, n > 0.
/// Equality of elements is equality of normal forms.
class RingElement {
 public:
  RingElement() : den_(1) {}
  RingElement(long v);  // NOLINT: integers embed implicitly
  RingElement(const mpz_class& v);  // NOLINT

  /// Normal form of h/n. Throws PreconditionError when n <= 0.
  static RingElement normalize(IntPoly h, mpz_class n);
  /// Normal form of sum c_i x^i.
  static RingElement from_rationals(std::span<const mpq_class> coeffs);
  static RingElement x() { return normalize(IntPoly::x(), 1); }

  const IntPoly& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int degree() const { return num_.degree(); }
  mpq_class lc() const;
  mpq_class coeff(std::size_t i) const;
  std::vector<mpq_class> rational_coeffs() const;
  Sign sign() const;
  /// Degree zero (or zero) with denominator 1.
  bool is_integer() const { return den_ == 1 && num_.degree() <= 0; }
  mpz_class integer_value() const { return num_.coeff(0); }

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator-(RingElement a);

  friend bool operator==(const RingElement&, const RingElement&) = default;
  /// The discrete order: a > b iff lc(a - b) > 0.
  friend std::strong_ordering operator<=>(const RingElement& a, const RingElement& b);

 private:
  RingElement(IntPoly h, mpz_class n) : num_(std::move(h)), den_(std::move(n)) {}

  IntPoly num_;
  mpz_class den_;
};

Sign compare(const RingElement& a, const RingElement& b);
RingElement abs(const RingElement& a);
/// Scale by a rational constant.
RingElement scale(const RingElement& a, const mpq_class& c);

struct QuotRem {
  RingElement quotient;
  RingElement remainder;
};

/// Division with remainder in Q[x]: q = quotient*r + remainder with
/// deg remainder < deg r. Throws DivisionByZero on r = 0.
QuotRem qdiv(const RingElement& q, const RingElement& r);

/// Text form accepted back by parse_element, e.g. "(x^2 + x)/2".
std::string to_string(const IntPoly& h);
std::string to_string(const RingElement& e);
std::string to_string(Sign s);

}  // namespace qe
