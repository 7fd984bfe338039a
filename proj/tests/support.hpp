#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qe/adversary.hpp"
#include "qe/poly.hpp"
#include "qe/rtau.hpp"
#include "qe/tau.hpp"

namespace qe::testing {

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPoly(std::move(c));
}

/// A member (g - beta)/n of R_tau with beta = g mod n in the ring's sense.
inline RingElement random_member(const RingContext& ctx, std::mt19937_64& rng, int max_degree, long bound,
                                 long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const IntPoly g = random_poly(rng, max_degree, bound);
  const mpz_class n = den(rng);
  const RingElement base = RingElement::normalize(g, 1);
  const mpz_class beta = integer_mod(ctx, base, n);
  return RingElement::normalize(g - IntPoly::constant(beta), n);
}

inline RingElement random_positive_member(const RingContext& ctx, std::mt19937_64& rng, int max_degree,
                                          long bound, long max_den) {
  for (;;) {
    RingElement e = random_member(ctx, rng, max_degree, bound, max_den);
    if (e.sign() == Sign::positive) return e;
    if (e.sign() == Sign::negative) return -e;
  }
}

inline std::vector<TauSpec> reference_taus() {
  return {TauSpec::constant(0), TauSpec::constant(1), TauSpec::constant(5), TauSpec::stream(42),
          TauSpec::log_generic(7)};
}

/// Extended Euclid on machine integers, independent of the ring code.
struct IntBezout {
  long long g, u, v;
};

inline IntBezout extended_euclid(long long a, long long b) {
  long long r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    long long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = u0 - q * u1;
    u0 = u1;
    u1 = t;
    t = v0 - q * v1;
    v0 = v1;
    v1 = t;
  }
  return {r0, u0, v0};
}

inline long long brute_gcd(long long a, long long b) {
  long long best = 1;
  for (long long d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    if (b % d == 0 && d > best) best = d;
    if (b % (a / d) == 0 && a / d > best) best = a / d;
  }
  return best;
}

}  // namespace qe::testing
