#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qe/error.hpp"
#include "qe/poly.hpp"
#include "qe/tau.hpp"

namespace qe {

/// The ring R_tau: h/n in Q[x] with h(tau_p) = 0 mod p^{v_p(n)} for every
/// prime p. Membership verdicts are memoized on the normal form.
class RingContext {
 public:
  explicit RingContext(TauSpec tau) : tau_(std::move(tau)) {}
  RingContext(const RingContext& other) : tau_(other.tau_) {}
  RingContext& operator=(const RingContext&) = delete;

  const TauSpec& tau() const { return tau_; }

  bool is_member(const RingElement& e) const;
  /// First prime power p^k || n at which h/n fails, if any.
  std::optional<NotMember> membership_failure(const RingElement& e) const;

  /// Validated constructor: normal form of h/n, or NotMember.
  RingElement make_element(IntPoly h, mpz_class n) const;
  /// Throws NotMember unless e is in R_tau.
  const RingElement& require_member(const RingElement& e) const;

 private:
  TauSpec tau_;
  mutable std::mutex mu_;
  mutable std::map<std::string, bool> verdicts_;
};

/// Which case of the division produced (p, s).
enum class DivBranch {
  shift_down,  ///< k = 0 and lc(s~) < 0: (p~ - 1, s~ + r)
  correct,     ///< ((p' - k)/m, s~ + (k/m) r)
};

struct DivisionResult {
  RingElement quotient;
  RingElement remainder;
  DivBranch branch;
  /// The CRT correction k in [0, m).
  mpz_class correction;
};

/// q = p*r + s with 0 <= s < |r| and p, s in R_tau. Throws DivisionByZero
/// for r = 0 and NotMember for non-member inputs.
DivisionResult divmod_detailed(const RingContext& ctx, const RingElement& q, const RingElement& r);
QuotRem divmod(const RingContext& ctx, const RingElement& q, const RingElement& r);

/// phi(q, r) in 2 x N^4 under lexicographic order.
struct NormTuple {
  unsigned delta = 0;
  mpz_class degree_q_plus_one = 0;
  mpz_class degree_r = 0;
  mpz_class common_denominator = 0;
  mpz_class scaled_lc = 0;

  std::array<mpz_class, 5> components() const;
  friend bool operator==(const NormTuple&, const NormTuple&) = default;
  friend std::strong_ordering operator<=>(const NormTuple& a, const NormTuple& b);
};

NormTuple phi(const RingElement& q, const RingElement& r);

/// Division chain from (a, b): a = q_1 b + r_1, b = q_2 r_1 + r_2, ... The
/// remainders are derived from the start and the quotients.
struct DivisionChain {
  RingElement a;
  RingElement b;
  std::vector<RingElement> quotients;
  std::vector<RingElement> remainders;

  std::size_t length() const { return quotients.size(); }
  /// r_i for 0 <= i <= length(), with r_0 = b.
  const RingElement& remainder(std::size_t i) const { return i == 0 ? b : remainders[i - 1]; }
  const RingElement& last_remainder() const { return remainder(length()); }
  bool terminating() const { return last_remainder().is_zero(); }
};

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

struct QeTrace {
  DivisionChain chain;
  /// phi(r_{i-1}, r_i) for i = 0 .. length (r_{-1} = a), ending at phi(., 0).
  std::vector<NormTuple> norms;
  std::vector<DivBranch> branches;
};

/// The quasi-Euclidean chain: q_{i+1} = r_{i-1} div r_i until the remainder
/// vanishes. Throws StepBudgetExceeded after max_steps divisions.
QeTrace qe_chain_trace(const RingContext& ctx, const RingElement& a, const RingElement& b,
                       std::size_t max_steps = kDefaultMaxSteps);
DivisionChain qe_chain(const RingContext& ctx, const RingElement& a, const RingElement& b,
                       std::size_t max_steps = kDefaultMaxSteps);

struct Bezout {
  RingElement gcd;
  RingElement u;
  RingElement v;
};

/// g = u*a + v*b with g > 0 dividing a and b. Throws PreconditionError on
/// (0, 0).
Bezout gcd_bezout(const RingContext& ctx, const RingElement& a, const RingElement& b,
                  std::size_t max_steps = kDefaultMaxSteps);

/// a | b in R_tau. Throws DivisionByZero for a = 0.
bool divides(const RingContext& ctx, const RingElement& a, const RingElement& b);

}  // namespace qe
