#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qe/rtau.hpp"

namespace qe {

/// Consecutive Fibonacci numbers (c, d) whose integer quasi-Euclidean chain
/// has more than 2k steps, so no integer chain of length <= k from (c, d)
/// terminates. Starts at (F_{2k+3}, F_{2k+2}) and moves up until the length
/// check passes.
std::pair<mpz_class, mpz_class> fib_pair_for(unsigned k);

/// True when the integer quasi-Euclidean chain of (c, d) is longer than 2k.
bool defeats_short_chains(const mpz_class& c, const mpz_class& d, unsigned k);

/// The unique beta in [0, d) with (b - beta)/d in R_tau. b must be a member.
mpz_class integer_mod(const RingContext& ctx, const RingElement& b, const mpz_class& d);

struct AdversarialPair {
  mpz_class c;
  mpz_class d;
  mpz_class beta;
  RingElement a;
};

/// a = (c/d)(b - beta) for b with deg b >= 1. Negative b is handled by
/// negation. Throws PreconditionError when deg b < 1.
AdversarialPair adversarial_pair(const RingContext& ctx, unsigned k, const RingElement& b);

/// lc(d r)/lc(b). Throws DivisionByZero on b = 0.
mpq_class hat(const mpz_class& d, const RingElement& b, const RingElement& r);

struct AdversaryReport {
  unsigned k;
  RingElement b;
  mpz_class c;
  mpz_class d;
  mpz_class beta;
  RingElement a;
  /// deg f_l for l = 1..2k (-1 once the chain has terminated).
  std::vector<int> degrees;
  /// hat(f_l) for the remainders whose degree equals deg b.
  std::vector<mpq_class> hats;
  /// hat(a), hat(b), hats, with the quasi-Euclidean quotients, form a
  /// valid division chain in Z from (c, d).
  bool projection_valid;
  bool verdict;
};

/// Runs the quasi-Euclidean chain from (a, b) and checks deg f_l >= deg b for
/// l <= 2k, which bounds every chain of length <= k from (a, b).
AdversaryReport degree_retention_check(const RingContext& ctx, unsigned k, const AdversarialPair& pair,
                                       const RingElement& b);
AdversaryReport run_adversary(const RingContext& ctx, unsigned k, const RingElement& b);

/// One round of the descent driven by a candidate norm: b_{j+1} is a
/// remainder r_l (l <= k) of the quasi-Euclidean chain from (a_j, b_j) with
/// N(r_l) < N(b_j).
struct DescentRound {
  RingElement b;
  RingElement a;
  std::optional<std::size_t> index;  // chosen l, if the table offers one
  std::optional<RingElement> next;
};

struct DescentDemo {
  std::vector<DescentRound> rounds;
  /// Set when the norm table fails to supply a smaller remainder, i.e. the
  /// table is not k-stage Euclidean on the explored elements.
  std::optional<std::string> stopped;
};

/// Starting from b_0 = x, follows the norm table (keyed by to_string of the
/// element) for at most `rounds` rounds. Degrees never drop below 1 along the
/// way, which is what forbids an infinite descent in N.
DescentDemo descent_demo(const RingContext& ctx, unsigned k, const std::map<std::string, mpz_class>& norms,
                         unsigned rounds);

}  // namespace qe
