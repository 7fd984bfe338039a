#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qe/poly.hpp"

namespace qe {

/// An element of Z/p^kZ, i.e. the image of a p-adic integer under the
/// projection to precision k. Precision 0 is the trivial ring.
class ResidueClass {
 public:
  ResidueClass(mpz_class prime, unsigned precision, const mpz_class& value);

  const mpz_class& prime() const { return prime_; }
  unsigned precision() const { return precision_; }
  const mpz_class& value() const { return value_; }
  mpz_class modulus() const;

  bool is_zero() const { return value_ == 0; }

  /// Largest j <= precision with p^j | value.
  unsigned valuation() const;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

 private:
  mpz_class prime_;
  unsigned precision_;
  mpz_class value_;
};

/// Bonding map of the inverse limit: drop to precision j <= r.precision().
ResidueClass reduce(const ResidueClass& r, unsigned j);

mpz_class prime_power(const mpz_class& p, unsigned k);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const mpz_class& n, const mpz_class& p);

bool is_prime(const mpz_class& n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Prime factorization of |n|, ascending primes. Small primes by trial
/// division, the rest by Pollard-Brent rho.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// Horner evaluation of h at t in Z/mZ; result in [0, m).
mpz_class eval_mod(const IntPoly& h, const mpz_class& t, const mpz_class& m);

/// The unique v mod p^k with f(v) = 0 (mod p^k) and v = root (mod p).
/// Requires f(root) = 0 and f'(root) != 0 mod p; throws PreconditionError
/// otherwise.
ResidueClass hensel_lift(const IntPoly& f, const mpz_class& p, const mpz_class& root, unsigned k);

/// Simple roots of f mod p (f(t) = 0, f'(t) != 0), ascending. Roots are
/// split out of gcd(f, x^p - x), so p may be large.
std::vector<mpz_class> simple_roots_mod(const IntPoly& f, const mpz_class& p);

struct Congruence {
  mpz_class modulus;
  mpz_class residue;
};

/// Chinese remaindering over pairwise coprime moduli. Returns the residue in
/// [0, product) together with the product. Throws PreconditionError when two
/// moduli share a factor.
Congruence crt_combine(std::span<const Congruence> parts);

}  // namespace qe
