#include "qe/rtau.hpp"

#include <stdexcept>

#include "qe/error.hpp"

namespace qe {

std::optional<NotMember> RingContext::membership_failure(const RingElement& e) const {
  if (e.denominator() == 1) return std::nullopt;
  for (const auto& [p, v] : factorize(e.denominator())) {
    const ResidueClass value = poly_eval_mod(e.numerator(), tau_, p, v);
    if (!value.is_zero()) return NotMember(p, v, value.value());
  }
  return std::nullopt;
}

bool RingContext::is_member(const RingElement& e) const {
  if (e.denominator() == 1) return true;
  const std::string key = to_string(e);
  {
    std::lock_guard lock(mu_);
    if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
  }
  const bool verdict = !membership_failure(e).has_value();
  std::lock_guard lock(mu_);
  verdicts_.emplace(key, verdict);
  return verdict;
}

RingElement RingContext::make_element(IntPoly h, mpz_class n) const {
  RingElement e = RingElement::normalize(std::move(h), std::move(n));
  if (auto failure = membership_failure(e)) throw *failure;
  return e;
}

const RingElement& RingContext::require_member(const RingElement& e) const {
  if (!is_member(e)) throw *membership_failure(e);
  return e;
}

namespace {

// Division with remainder for q >= 0 and r > 0.
DivisionResult divide_nonnegative(const RingContext& ctx, const RingElement& q, const RingElement& r) {
  auto [approx, rest] = qdiv(q, r);
  const IntPoly& top = approx.numerator();
  const mpz_class& m = approx.denominator();

  // k = top(tau_p) mod p^e for every p^e || m, glued by CRT.
  std::vector<Congruence> parts;
  if (m != 1) {
    for (const auto& [p, e] : factorize(m)) {
      const ResidueClass value = poly_eval_mod(top, ctx.tau(), p, e);
      parts.push_back({value.modulus(), value.value()});
    }
  }
  const mpz_class k = crt_combine(parts).residue;

  DivisionResult out;
  out.correction = k;
  if (k == 0 && rest.sign() == Sign::negative) {
    out.quotient = approx - 1;
    out.remainder = rest + r;
    out.branch = DivBranch::shift_down;
  } else {
    out.quotient = RingElement::normalize(top - IntPoly::constant(k), m);
    out.remainder = rest + scale(r, mpq_class(k, m));
    out.branch = DivBranch::correct;
  }
  if (out.remainder.sign() == Sign::negative || out.remainder >= r)
    throw std::logic_error("divmod: remainder out of range for " + to_string(q) + " / " + to_string(r));
  return out;
}

}  // namespace

DivisionResult divmod_detailed(const RingContext& ctx, const RingElement& q, const RingElement& r) {
  if (r.is_zero()) throw DivisionByZero();
  ctx.require_member(q);
  ctx.require_member(r);

  const bool negative_divisor = r.sign() == Sign::negative;
  const RingElement divisor = abs(r);
  DivisionResult out;
  if (q.sign() != Sign::negative) {
    out = divide_nonnegative(ctx, q, divisor);
  } else {
    out = divide_nonnegative(ctx, -q, divisor);
    out.quotient = -out.quotient;
    if (!out.remainder.is_zero()) {
      out.quotient -= 1;
      out.remainder = divisor - out.remainder;
    }
  }
  if (negative_divisor) out.quotient = -out.quotient;
  return out;
}

QuotRem divmod(const RingContext& ctx, const RingElement& q, const RingElement& r) {
  auto d = divmod_detailed(ctx, q, r);
  return {std::move(d.quotient), std::move(d.remainder)};
}

std::array<mpz_class, 5> NormTuple::components() const {
  return {mpz_class(delta), degree_q_plus_one, degree_r, common_denominator, scaled_lc};
}

std::strong_ordering operator<=>(const NormTuple& a, const NormTuple& b) {
  const auto x = a.components();
  const auto y = b.components();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

NormTuple phi(const RingElement& q, const RingElement& r) {
  if (r.is_zero()) return {};
  NormTuple t;
  t.delta = abs(q) <= abs(r) ? 1 : 0;
  t.degree_q_plus_one = q.degree() + 1;
  t.degree_r = r.degree();
  mpz_lcm(t.common_denominator.get_mpz_t(), q.denominator().get_mpz_t(), r.denominator().get_mpz_t());
  const mpq_class scaled = t.common_denominator * ::abs(q.lc());
  t.scaled_lc = scaled.get_num();  // integral: the common denominator clears lc(q)
  return t;
}

QeTrace qe_chain_trace(const RingContext& ctx, const RingElement& a, const RingElement& b,
                       std::size_t max_steps) {
  if (b.is_zero()) throw PreconditionError("qe_chain: b must be nonzero");
  ctx.require_member(a);
  ctx.require_member(b);

  QeTrace trace{DivisionChain{a, b, {}, {}}, {phi(a, b)}, {}};
  RingElement prev = a;
  RingElement cur = b;
  while (!cur.is_zero()) {
    if (trace.chain.quotients.size() == max_steps) throw StepBudgetExceeded(max_steps);
    DivisionResult step = divmod_detailed(ctx, prev, cur);
    trace.norms.push_back(phi(cur, step.remainder));
    trace.branches.push_back(step.branch);
    trace.chain.quotients.push_back(std::move(step.quotient));
    trace.chain.remainders.push_back(step.remainder);
    prev = std::move(cur);
    cur = std::move(step.remainder);
  }
  return trace;
}

DivisionChain qe_chain(const RingContext& ctx, const RingElement& a, const RingElement& b,
                       std::size_t max_steps) {
  return qe_chain_trace(ctx, a, b, max_steps).chain;
}

namespace {

// Row-major 2x2 matrix over R_tau.
struct Mat2 {
  RingElement a00 = 1, a01 = 0, a10 = 0, a11 = 1;

  // Left-multiply by the elementary step [[0, 1], [1, -q]].
  void step(const RingElement& q) {
    RingElement n10 = a00 - q * a10;
    RingElement n11 = a01 - q * a11;
    a00 = std::move(a10);
    a01 = std::move(a11);
    a10 = std::move(n10);
    a11 = std::move(n11);
  }
};

}  // namespace

Bezout gcd_bezout(const RingContext& ctx, const RingElement& a, const RingElement& b, std::size_t max_steps) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of (0, 0) is undefined");
  ctx.require_member(a);
  ctx.require_member(b);
  const RingElement sa = a.sign() == Sign::negative ? -1 : 1;
  const RingElement sb = b.sign() == Sign::negative ? -1 : 1;
  if (b.is_zero()) return {abs(a), sa, 0};

  // (r_{i-1}, r_i)^T = M (|a|, |b|)^T along the chain; the top row at the end
  // expresses the last nonzero remainder.
  const DivisionChain chain = qe_chain(ctx, abs(a), abs(b), max_steps);
  Mat2 m;
  for (const auto& q : chain.quotients) m.step(q);
  return {chain.remainder(chain.length() - 1), m.a00 * sa, m.a01 * sb};
}

bool divides(const RingContext& ctx, const RingElement& a, const RingElement& b) {
  if (a.is_zero()) throw DivisionByZero();
  auto [quot, rem] = qdiv(b, a);
  return rem.is_zero() && ctx.is_member(quot);
}

}  // namespace qe
