#include "qe/chains.hpp"

#include <algorithm>
#include <stdexcept>

#include "qe/error.hpp"

namespace qe {

DivisionChain build_chain(const RingElement& a, const RingElement& b, std::vector<RingElement> quotients) {
  if (b.is_zero()) throw PreconditionError("division chain needs b != 0");
  DivisionChain c{a, b, std::move(quotients), {}};
  c.remainders.reserve(c.quotients.size());
  RingElement prev = a;
  RingElement cur = b;
  for (const auto& q : c.quotients) {
    RingElement next = prev - q * cur;
    c.remainders.push_back(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return c;
}

DivisionChain build_chain(const RingContext& ctx, const RingElement& a, const RingElement& b,
                          std::vector<RingElement> quotients) {
  ctx.require_member(a);
  ctx.require_member(b);
  for (const auto& q : quotients) ctx.require_member(q);
  return build_chain(a, b, std::move(quotients));
}

bool is_consistent(const DivisionChain& c) {
  if (c.b.is_zero() || c.remainders.size() != c.quotients.size()) return false;
  return build_chain(c.a, c.b, c.quotients).remainders == c.remainders;
}

namespace {

// 0-based position j >= 1 of the first quotient matching pred, i.e. q_{j+1}.
template <class Pred>
std::optional<std::size_t> first_past_head(const DivisionChain& c, Pred pred) {
  for (std::size_t j = 1; j < c.quotients.size(); ++j)
    if (pred(c.quotients[j])) return j;
  return std::nullopt;
}

bool has_zero_past_head(const DivisionChain& c) {
  return first_past_head(c, [](const RingElement& q) { return q.is_zero(); }).has_value();
}

bool has_negative_past_head(const DivisionChain& c) {
  return first_past_head(c, [](const RingElement& q) { return q.sign() == Sign::negative; }).has_value();
}

}  // namespace

DivisionChain t1(const DivisionChain& c) {
  const auto found = first_past_head(c, [](const RingElement& q) { return q.sign() == Sign::negative; });
  if (!found) return c;
  const std::size_t i = *found;  // q_{i+1} is quotients[i]
  std::vector<RingElement> qs(c.quotients.begin(), c.quotients.begin() + static_cast<std::ptrdiff_t>(i - 1));
  qs.push_back(c.quotients[i - 1] - 1);
  qs.emplace_back(1);
  qs.push_back(-(c.quotients[i] + 1));
  for (std::size_t j = i + 1; j < c.quotients.size(); ++j) qs.push_back(-c.quotients[j]);
  return build_chain(c.a, c.b, std::move(qs));
}

DivisionChain t2(const DivisionChain& c) {
  const auto found = first_past_head(c, [](const RingElement& q) { return q.is_zero(); });
  if (!found) return c;
  const std::size_t i = *found;
  std::vector<RingElement> qs(c.quotients.begin(), c.quotients.begin() + static_cast<std::ptrdiff_t>(i - 1));
  if (i + 1 < c.quotients.size()) {
    qs.push_back(c.quotients[i - 1] + c.quotients[i + 1]);
    for (std::size_t j = i + 2; j < c.quotients.size(); ++j) qs.push_back(c.quotients[j]);
  }
  return build_chain(c.a, c.b, std::move(qs));
}

std::size_t negative_depth(const DivisionChain& c) {
  const std::size_t k = c.length();
  for (std::size_t j = 1; j < k; ++j)
    if (c.quotients[j].sign() == Sign::negative) return k - j;
  return 0;
}

NormalizedChain normalize_positive(const DivisionChain& c) {
  if (c.a.sign() != Sign::positive || c.b.sign() != Sign::positive)
    throw PreconditionError("normalize_positive: start (a, b) must be positive");
  if (c.length() == 0) throw PreconditionError("normalize_positive: chain must be nonempty");

  NormalizedChain out{c, {}};
  for (;;) {
    const std::pair<std::size_t, std::size_t> before{negative_depth(out.chain), out.chain.length()};
    char rule;
    if (has_zero_past_head(out.chain)) {
      out.chain = t2(out.chain);
      rule = '2';
    } else if (has_negative_past_head(out.chain)) {
      out.chain = t1(out.chain);
      rule = '1';
    } else {
      break;
    }
    const std::pair<std::size_t, std::size_t> after{negative_depth(out.chain), out.chain.length()};
    if (!(after < before)) throw std::logic_error("normalize_positive: rewrite measure did not decrease");
    out.steps.push_back({rule, out.chain});
  }
  return out;
}

ChainComparison compare_to_qe(const RingContext& ctx, const DivisionChain& c) {
  if (c.a.sign() != Sign::positive || c.b.sign() != Sign::positive)
    throw PreconditionError("compare_to_qe: start (a, b) must be positive");
  ChainComparison out{qe_chain(ctx, c.a, c.b), {}, std::nullopt, true};
  const std::size_t n = out.qe.length();
  const std::size_t k = c.length();

  for (std::size_t l = 1; l <= std::min(k, n / 2); ++l) {
    BoundCheck check{l, abs(c.remainder(l)), out.qe.remainder(2 * l), false};
    check.satisfied = check.remainder >= check.bound;
    out.verdict = out.verdict && check.satisfied;
    out.remainder_bounds.push_back(std::move(check));
  }

  const bool positive_tail = std::all_of(c.quotients.begin() + (k > 0 ? 1 : 0), c.quotients.end(),
                                         [](const RingElement& q) { return q.sign() == Sign::positive; });
  if (positive_tail && n >= k) {
    BoundCheck check{k, abs(c.last_remainder()), k + 1 <= n ? out.qe.remainder(k + 1) : RingElement(0), false};
    check.satisfied = check.remainder >= check.bound;
    out.verdict = out.verdict && check.satisfied;
    out.positive_quotient = std::move(check);
  }
  return out;
}

mpz_class fibonacci(unsigned n) {
  mpz_class out;
  mpz_fib_ui(out.get_mpz_t(), n);
  return out;
}

DivisionChain equality_chain(const mpz_class& a, const mpz_class& b, unsigned k) {
  if (a <= 0 || b <= 0) throw PreconditionError("equality_chain: start must be positive");
  const RingContext integers(TauSpec::zero());
  const DivisionChain qe = qe_chain(integers, a, b);
  if (qe.length() < 2 * static_cast<std::size_t>(k) + 1)
    throw PreconditionError("quasi-Euclidean chain of (" + a.get_str() + ", " + b.get_str() +
                            ") is too short to witness k = " + std::to_string(k));

  // Nearest-integer division: q = floor((2 prev + cur) / (2 cur)).
  std::vector<RingElement> qs;
  mpz_class prev = a;
  mpz_class cur = b;
  for (unsigned l = 1; l <= k; ++l) {
    mpz_class q;
    mpz_class twice = 2 * cur;
    mpz_class num = 2 * prev + cur;
    if (twice < 0) {
      twice = -twice;
      num = -(2 * prev) + ::abs(cur);
    }
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), twice.get_mpz_t());
    qs.emplace_back(q);
    mpz_class next = prev - q * cur;
    prev = cur;
    cur = next;
  }
  DivisionChain chain = build_chain(RingElement(a), RingElement(b), std::move(qs));
  for (unsigned l = 1; l <= k; ++l)
    if (abs(chain.remainder(l)) != qe.remainder(2 * l))
      throw PreconditionError("no equality chain from (" + a.get_str() + ", " + b.get_str() + ")");
  return chain;
}

FibonacciWitness fibonacci_witness(unsigned k) {
  if (k == 0) throw PreconditionError("fibonacci_witness: k must be positive");
  const mpz_class a = fibonacci(2 * k + 5);
  const mpz_class b = fibonacci(2 * k + 4);
  return {a, b, equality_chain(a, b, k)};
}

}  // namespace qe
