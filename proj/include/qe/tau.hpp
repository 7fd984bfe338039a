#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "qe/padic.hpp"
#include "qe/poly.hpp"

namespace qe {

namespace detail {
class TauNode;
}

enum class TauKind { constant, zero, stream, hensel, log_generic, piecewise, zero_on };

std::string to_string(TauKind kind);

/// A computable point tau of prod_p J_p: each component tau_p is available to
/// any finite precision. Queries are memoized per prime (the cache keeps the
/// deepest residue seen and reduces from it) and coherent across precisions.
/// TauSpec is a cheap shared handle; copies share the cache, which is guarded
/// by a mutex so a spec may be queried from several threads.
class TauSpec {
 public:
  /// The canonical image of an integer z.
  static TauSpec constant(const mpz_class& z);
  static TauSpec zero();
  /// Digits drawn from a PRNG keyed by (seed, p, digit index).
  static TauSpec stream(std::uint64_t seed);
  /// tau_p is the lift of the smallest simple root of f mod p; primes without
  /// one defer to `fallback`.
  static TauSpec hensel(IntPoly f, TauSpec fallback);
  /// Digit 0 of tau_p is floor(ln p), higher digits come from stream(seed).
  static TauSpec log_generic(std::uint64_t seed);
  static TauSpec piecewise(std::map<std::uint64_t, TauSpec> overrides, TauSpec fallback);
  /// tau_p = 0 for primes satisfying `pred`, base otherwise. Not serializable;
  /// use piecewise for finite prime sets.
  static TauSpec zero_on(std::function<bool(const mpz_class&)> pred, TauSpec base);

  TauKind kind() const;

  /// pi_k(tau_p). p must be prime.
  ResidueClass query(const mpz_class& p, unsigned k) const;

  /// True when the spec guarantees h(tau_p) = 0 exactly in J_p, not just to
  /// some finite precision. Never true for stream digits.
  bool certifies_root(const IntPoly& h, const mpz_class& p) const;

  /// Number of cache misses so far (queries that had to compute digits).
  std::size_t cache_misses() const;

  const detail::TauNode& node() const { return *node_; }

 private:
  explicit TauSpec(std::shared_ptr<const detail::TauNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::TauNode> node_;
};

/// pi_k(h(tau_p)), by Horner's rule in Z/p^kZ.
ResidueClass poly_eval_mod(const IntPoly& h, const TauSpec& tau, const mpz_class& p, unsigned k);

}  // namespace qe
