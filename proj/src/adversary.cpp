#include "qe/adversary.hpp"

#include <stdexcept>

#include "qe/chains.hpp"
#include "qe/error.hpp"

namespace qe {

bool defeats_short_chains(const mpz_class& c, const mpz_class& d, unsigned k) {
  if (c <= 0 || d <= 0) return false;
  const RingContext integers(TauSpec::zero());
  return qe_chain(integers, c, d).length() > 2 * static_cast<std::size_t>(k);
}

std::pair<mpz_class, mpz_class> fib_pair_for(unsigned k) {
  if (k == 0) throw PreconditionError("fib_pair_for: k must be positive");
  unsigned m = 2 * k + 2;
  while (!defeats_short_chains(fibonacci(m + 1), fibonacci(m), k)) ++m;
  return {fibonacci(m + 1), fibonacci(m)};
}

mpz_class integer_mod(const RingContext& ctx, const RingElement& b, const mpz_class& d) {
  if (d < 1) throw PreconditionError("integer_mod: modulus must be positive");
  ctx.require_member(b);
  const IntPoly& h = b.numerator();
  const mpz_class& n = b.denominator();

  std::vector<Congruence> parts;
  if (d != 1) {
    for (const auto& [p, e] : factorize(d)) {
      const unsigned v = mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) ? valuation(n, p) : 0;
      const mpz_class pv = prime_power(p, v);
      const mpz_class pe = prime_power(p, e);
      // h(tau_p) = beta * n (mod p^{v+e}); membership of b makes p^v divide both sides.
      const mpz_class value = poly_eval_mod(h, ctx.tau(), p, v + e).value();
      if (!mpz_divisible_p(value.get_mpz_t(), pv.get_mpz_t()))
        throw std::logic_error("integer_mod: member with h(tau_p) not divisible by p^v");
      mpz_class lhs = value / pv;
      mpz_class unit = n / pv;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), pe.get_mpz_t());
      mpz_class beta = lhs * inv;
      mpz_fdiv_r(beta.get_mpz_t(), beta.get_mpz_t(), pe.get_mpz_t());
      parts.push_back({pe, beta});
    }
  }
  return crt_combine(parts).residue;
}

AdversarialPair adversarial_pair(const RingContext& ctx, unsigned k, const RingElement& b) {
  if (b.degree() < 1) throw PreconditionError("adversarial_pair: deg b must be at least 1");
  if (b.sign() == Sign::negative) {
    AdversarialPair out = adversarial_pair(ctx, k, -b);
    out.a = -out.a;
    return out;
  }
  ctx.require_member(b);
  auto [c, d] = fib_pair_for(k);
  const mpz_class beta = integer_mod(ctx, b, d);
  RingElement a = scale(b - beta, mpq_class(c, d));
  if (!ctx.is_member(a)) throw std::logic_error("adversarial_pair: constructed a is not a member");
  return {c, d, beta, std::move(a)};
}

mpq_class hat(const mpz_class& d, const RingElement& b, const RingElement& r) {
  if (b.is_zero()) throw DivisionByZero();
  return mpq_class(d * r.lc() / b.lc());
}

AdversaryReport degree_retention_check(const RingContext& ctx, unsigned k, const AdversarialPair& pair,
                                       const RingElement& b) {
  const RingElement pos_a = abs(pair.a);
  const RingElement pos_b = abs(b);
  const DivisionChain chain = qe_chain(ctx, pos_a, pos_b);

  AdversaryReport report{k, b, pair.c, pair.d, pair.beta, pair.a, {}, {}, true, true};
  const std::size_t horizon = 2 * static_cast<std::size_t>(k);
  for (std::size_t l = 1; l <= horizon; ++l) {
    const int deg = l <= chain.length() ? chain.remainder(l).degree() : -1;
    report.degrees.push_back(deg);
    report.verdict = report.verdict && deg >= b.degree();
  }

  // Project the leading segment, while the degree is retained, onto Z.
  std::vector<RingElement> quotients;
  for (std::size_t l = 1; l <= std::min(horizon, chain.length()); ++l) {
    if (chain.remainder(l).degree() != b.degree()) break;
    report.hats.push_back(hat(pair.d, pos_b, chain.remainder(l)));
    quotients.push_back(chain.quotients[l - 1]);
  }
  bool valid = hat(pair.d, pos_b, pos_a) == mpq_class(pair.c) && hat(pair.d, pos_b, pos_b) == mpq_class(pair.d);
  for (const auto& q : quotients) valid = valid && q.is_integer();
  for (const auto& h : report.hats) valid = valid && h.get_den() == 1;
  if (valid) {
    const DivisionChain projected = build_chain(pair.c, pair.d, quotients);
    for (std::size_t i = 0; i < report.hats.size(); ++i)
      valid = valid && projected.remainder(i + 1) == RingElement(mpz_class(report.hats[i].get_num()));
  }
  report.projection_valid = valid;
  return report;
}

AdversaryReport run_adversary(const RingContext& ctx, unsigned k, const RingElement& b) {
  return degree_retention_check(ctx, k, adversarial_pair(ctx, k, b), b);
}

DescentDemo descent_demo(const RingContext& ctx, unsigned k, const std::map<std::string, mpz_class>& norms,
                         unsigned rounds) {
  // Entries missing from the table fall back to deg + 1, the Euclidean norm of Q[x].
  const auto norm = [&](const RingElement& e) {
    auto it = norms.find(to_string(e));
    return it != norms.end() ? it->second : mpz_class(e.degree() + 1);
  };

  DescentDemo demo;
  RingElement b = RingElement::x();
  for (unsigned j = 0; j < rounds; ++j) {
    const AdversarialPair pair = adversarial_pair(ctx, k, b);
    DescentRound round{b, pair.a, std::nullopt, std::nullopt};
    const DivisionChain chain = qe_chain(ctx, abs(pair.a), abs(b));
    for (std::size_t l = 1; l <= std::min<std::size_t>(k, chain.length()); ++l) {
      if (norm(chain.remainder(l)) < norm(b)) {
        round.index = l;
        round.next = chain.remainder(l);
        break;
      }
    }
    demo.rounds.push_back(round);
    if (!round.next) {
      demo.stopped = "no remainder r_l with l <= " + std::to_string(k) + " has smaller norm than b = " + to_string(b);
      break;
    }
    if (round.next->degree() < b.degree()) throw std::logic_error("descent_demo: degree dropped");
    b = abs(*round.next);
  }
  return demo;
}

}  // namespace qe
