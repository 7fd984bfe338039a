#include "qe/tau.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "qe/error.hpp"
#include "tau_node.hpp"

namespace qe {
namespace detail {

ResidueClass TauNode::query(const mpz_class& p, unsigned k) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(p); it != cache_.end() && it->second.precision >= k)
      return ResidueClass(p, k, it->second.value);
  }
  if (!is_prime(p)) throw std::invalid_argument("tau query at non-prime " + p.get_str());
  mpz_class v = compute(p, k);
  std::lock_guard lock(mu_);
  ++misses_;
  auto [it, inserted] = cache_.try_emplace(p, Entry{k, v});
  if (!inserted && it->second.precision < k) it->second = {k, v};
  return ResidueClass(p, k, v);
}

std::size_t TauNode::cache_misses() const {
  std::lock_guard lock(mu_);
  return misses_;
}

mpz_class ConstantNode::compute(const mpz_class& p, unsigned k) const {
  return ResidueClass(p, k, value).value();
}

bool ConstantNode::certifies_root(const IntPoly& h, const mpz_class&) const { return h.eval(value) == 0; }

mpz_class stream_digit(std::uint64_t seed, const mpz_class& p, unsigned i) {
  // The seed sequence carries p as 32-bit words, at least two of them.
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const std::size_t pwords = std::max<std::size_t>(2, (mpz_sizeinbase(p.get_mpz_t(), 2) + 31) / 32);
  mpz_class rest = p;
  for (std::size_t w = 0; w < pwords; ++w) {
    words.push_back(static_cast<std::uint32_t>(mpz_get_ui(rest.get_mpz_t()) & 0xffffffffUL));
    rest >>= 32;
  }
  words.push_back(i);
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 engine(seq);
  if (p.fits_ulong_p()) return mpz_class(static_cast<unsigned long>(engine() % p.get_ui()));
  // 64 spare bits keep the reduction close to uniform.
  mpz_class draw = 0;
  for (std::size_t bits = 0; bits < mpz_sizeinbase(p.get_mpz_t(), 2) + 64; bits += 64) {
    draw <<= 64;
    draw += mpz_class(static_cast<unsigned long>(engine()));
  }
  return draw % p;
}

mpz_class StreamNode::compute(const mpz_class& p, unsigned k) const {
  mpz_class value = 0;
  mpz_class place = 1;
  for (unsigned i = 0; i < k; ++i) {
    value += place * stream_digit(seed, p, i);
    place *= p;
  }
  return value;
}

namespace {

std::uint64_t floor_log_small(std::uint64_t p) {
  auto n = static_cast<std::uint64_t>(std::floor(std::log(static_cast<long double>(p))));
  // e^n is irrational for n >= 1, so only rounding near a boundary needs fixing.
  while (n > 0 && std::exp(static_cast<long double>(n)) > static_cast<long double>(p)) --n;
  while (std::exp(static_cast<long double>(n + 1)) <= static_cast<long double>(p)) ++n;
  return n;
}

}  // namespace

mpz_class floor_log(const mpz_class& p) {
  if (!p.fits_ulong_p()) {
    long exp2 = 0;
    const long double mantissa = mpz_get_d_2exp(&exp2, p.get_mpz_t());
    return static_cast<unsigned long>(std::floor(std::log(mantissa) + exp2 * std::log(2.0L)));
  }
  return floor_log_small(p.get_ui());
}

mpz_class LogGenericNode::compute(const mpz_class& p, unsigned k) const {
  if (k == 0) return 0;
  mpz_class value = floor_log(p) % p;
  mpz_class place = p;
  for (unsigned i = 1; i < k; ++i) {
    value += place * stream_digit(seed, p, i);
    place *= p;
  }
  return value;
}

mpz_class HenselNode::compute(const mpz_class& p, unsigned k) const {
  const auto roots = simple_roots_mod(poly, p);
  if (roots.empty()) return fallback.query(p, k).value();
  return hensel_lift(poly, p, roots.front(), k).value();
}

bool HenselNode::certifies_root(const IntPoly& h, const mpz_class& p) const {
  const auto roots = simple_roots_mod(poly, p);
  if (roots.empty()) return fallback.certifies_root(h, p);
  // tau_p is the unique p-adic root of f above roots[0]. A factor g of f that
  // vanishes at roots[0] mod p has its own lift there, which is then tau_p.
  const IntPoly g = rational_gcd(poly, h);
  if (g.degree() < 1) return false;
  return eval_mod(g, roots.front(), p) == 0;
}

const TauSpec& PiecewiseNode::at(const mpz_class& p) const {
  if (!p.fits_ulong_p()) return fallback;
  auto it = overrides.find(p.get_ui());
  return it == overrides.end() ? fallback : it->second;
}

mpz_class PiecewiseNode::compute(const mpz_class& p, unsigned k) const { return at(p).query(p, k).value(); }

bool PiecewiseNode::certifies_root(const IntPoly& h, const mpz_class& p) const {
  return at(p).certifies_root(h, p);
}

mpz_class ZeroOnNode::compute(const mpz_class& p, unsigned k) const {
  return pred(p) ? mpz_class(0) : base.query(p, k).value();
}

bool ZeroOnNode::certifies_root(const IntPoly& h, const mpz_class& p) const {
  return pred(p) ? h.coeff(0) == 0 : base.certifies_root(h, p);
}

}  // namespace detail

std::string to_string(TauKind kind) {
  switch (kind) {
    case TauKind::constant:
      return "constant";
    case TauKind::zero:
      return "zero";
    case TauKind::stream:
      return "stream";
    case TauKind::hensel:
      return "hensel";
    case TauKind::log_generic:
      return "log_generic";
    case TauKind::piecewise:
      return "piecewise";
    case TauKind::zero_on:
      return "zero_on";
  }
  return "unknown";
}

TauSpec TauSpec::constant(const mpz_class& z) { return TauSpec(std::make_shared<detail::ConstantNode>(z)); }

TauSpec TauSpec::zero() { return TauSpec(std::make_shared<detail::ZeroNode>()); }

TauSpec TauSpec::stream(std::uint64_t seed) { return TauSpec(std::make_shared<detail::StreamNode>(seed)); }

TauSpec TauSpec::hensel(IntPoly f, TauSpec fallback) {
  if (f.degree() < 1) throw PreconditionError("hensel: polynomial must have degree >= 1");
  return TauSpec(std::make_shared<detail::HenselNode>(std::move(f), std::move(fallback)));
}

TauSpec TauSpec::log_generic(std::uint64_t seed) {
  return TauSpec(std::make_shared<detail::LogGenericNode>(seed));
}

TauSpec TauSpec::piecewise(std::map<std::uint64_t, TauSpec> overrides, TauSpec fallback) {
  for (const auto& [p, spec] : overrides)
    if (!is_prime(p)) throw PreconditionError("piecewise: override key " + std::to_string(p) + " is not prime");
  return TauSpec(std::make_shared<detail::PiecewiseNode>(std::move(overrides), std::move(fallback)));
}

TauSpec TauSpec::zero_on(std::function<bool(const mpz_class&)> pred, TauSpec base) {
  return TauSpec(std::make_shared<detail::ZeroOnNode>(std::move(pred), std::move(base)));
}

TauKind TauSpec::kind() const { return node_->kind(); }

ResidueClass TauSpec::query(const mpz_class& p, unsigned k) const { return node_->query(p, k); }

bool TauSpec::certifies_root(const IntPoly& h, const mpz_class& p) const {
  return h.is_zero() || node_->certifies_root(h, p);
}

std::size_t TauSpec::cache_misses() const { return node_->cache_misses(); }

ResidueClass poly_eval_mod(const IntPoly& h, const TauSpec& tau, const mpz_class& p, unsigned k) {
  if (k == 0) return ResidueClass(p, 0, 0);
  const ResidueClass t = tau.query(p, k);
  return ResidueClass(p, k, eval_mod(h, t.value(), t.modulus()));
}

}  // namespace qe
