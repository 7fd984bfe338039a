#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "qe/rtau.hpp"

namespace qe {

struct ShHit {
  std::uint64_t prime;
  /// Largest k <= k_max with pi_k(h(tau_p)) = 0; S_h contains (p, 1..depth).
  unsigned depth;
  /// depth == k_max: the scan could not see the bottom.
  bool saturated;
  /// The spec guarantees h(tau_p) = 0 exactly.
  bool certified_root;
};

/// S_h = {(p, k) : pi_k(h(tau_p)) = 0} restricted to p <= p_max, k <= k_max.
/// Only primes with depth >= 1 are listed.
struct ShScan {
  IntPoly h;
  std::uint64_t p_max;
  unsigned k_max;
  std::vector<ShHit> hits;

  bool any_saturated() const;
};

/// Throws PreconditionError for h = 0. Primes are scanned in parallel; the
/// result equals the sequential scan.
ShScan scan_sh(const RingContext& ctx, const IntPoly& h, std::uint64_t p_max, unsigned k_max);

enum class WitnessStrategy {
  automatic,       ///< prime powers at a certified root, else distinct primes
  prime_power,     ///< h/p, h/p^2, ... only
  distinct_primes  ///< h/p_1, h/(p_1 p_2), ... only
};

/// A chain e_1, e_2, ... in R_tau with each e_{j+1} properly dividing e_j,
/// certifying that R_tau is not a UFD.
struct NonUfdWitness {
  IntPoly h;
  /// The primes dividing out at each step (repeated for prime powers).
  std::vector<std::uint64_t> primes;
  std::vector<RingElement> chain;
};

struct WitnessBounds {
  std::uint64_t p_max = 50;
  unsigned k_max = 8;
};

/// Looks for a descending divisibility chain of length `depth` (>= 2) built
/// from h. Returns nullopt when the box holds no such evidence; that is
/// inconclusive, not a proof of PID-ness.
std::optional<NonUfdWitness> non_ufd_witness(const RingContext& ctx, const IntPoly& h, unsigned depth,
                                             WitnessBounds bounds = {},
                                             WitnessStrategy strategy = WitnessStrategy::automatic);

/// Checks membership of every element and proper divisibility between
/// neighbours (e_{j+1} | e_j, not e_j | e_{j+1}), starting from h itself.
bool verify_witness(const RingContext& ctx, const NonUfdWitness& w);

/// Generic tau for the PID family: digit 0 of tau_p is floor(ln p).
TauSpec make_log_generic(std::uint64_t seed);
/// tau_p = 0 on the given primes, base elsewhere.
TauSpec make_zero_on(const std::set<std::uint64_t>& primes, const TauSpec& base);
TauSpec make_zero_on(std::function<bool(const mpz_class&)> pred, const TauSpec& base);

}  // namespace qe
