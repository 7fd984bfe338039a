#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qe/rtau.hpp"

namespace qe {

/// Derives r_1..r_k from (a, b) and the quotients by r_{i+1} = r_{i-1} - q_{i+1} r_i.
/// Throws PreconditionError on b = 0.
DivisionChain build_chain(const RingElement& a, const RingElement& b, std::vector<RingElement> quotients);
/// As above, additionally requiring every quotient (and the start) to lie in R_tau.
DivisionChain build_chain(const RingContext& ctx, const RingElement& a, const RingElement& b,
                          std::vector<RingElement> quotients);

/// Recomputes the remainders and compares them with the stored ones.
bool is_consistent(const DivisionChain& c);

/// Removes the first negative quotient q_{i+1} (i >= 1):
///   (.., q_i, q_{i+1}, q_{i+2}, ..) -> (.., q_i - 1, 1, -(q_{i+1} + 1), -q_{i+2}, ..).
/// Identity when q_2..q_k are all non-negative. q_1 is never rewritten.
DivisionChain t1(const DivisionChain& c);

/// Removes the first zero quotient q_{i+1} (i >= 1) by merging q_i + q_{i+2};
/// when the zero is the final quotient the chain is cut to length i - 1.
DivisionChain t2(const DivisionChain& c);

/// n_Q = max{k - i + 1 : i > 1, q_i < 0}, or 0.
std::size_t negative_depth(const DivisionChain& c);

struct RewriteStep {
  char rule;  // '1' or '2'
  DivisionChain chain;
};

struct NormalizedChain {
  DivisionChain chain;
  std::vector<RewriteStep> steps;
};

/// Rewrites to a chain whose quotients past the first are positive, with the
/// same start and the same |last remainder|: T2 while a zero quotient exists,
/// else T1. Requires a, b > 0 and a nonempty chain.
NormalizedChain normalize_positive(const DivisionChain& c);

struct BoundCheck {
  std::size_t index;      // l
  RingElement remainder;  // |r_l|
  RingElement bound;      // f_{2l}, or f_{k+1} for the positive-quotient check
  bool satisfied;
};

struct ChainComparison {
  DivisionChain qe;
  /// |r_l| >= f_{2l} for 1 <= l <= min(k, n/2).
  std::vector<BoundCheck> remainder_bounds;
  /// |r_k| >= f_{k+1}, present when q_2..q_k > 0 and the quasi-Euclidean
  /// chain is at least as long as c.
  std::optional<BoundCheck> positive_quotient;
  bool verdict;
};

/// Compares an arbitrary chain from (a, b), a, b > 0, against the
/// quasi-Euclidean chain from the same start.
ChainComparison compare_to_qe(const RingContext& ctx, const DivisionChain& c);

/// Consecutive Fibonacci numbers (F_{2k+5}, F_{2k+4}) with the chain
/// q_1 = 2 followed by nearest-integer quotients, which meets the remainder
/// bound with equality: |r_l| = f_{2l} for l <= k.
struct FibonacciWitness {
  mpz_class a;
  mpz_class b;
  DivisionChain chain;
};

FibonacciWitness fibonacci_witness(unsigned k);

/// Builds the equality chain for an arbitrary integer start. Throws
/// PreconditionError when the quasi-Euclidean chain of (a, b) has fewer than
/// 2k + 1 steps or when equality cannot be met.
DivisionChain equality_chain(const mpz_class& a, const mpz_class& b, unsigned k);

mpz_class fibonacci(unsigned n);

}  // namespace qe
