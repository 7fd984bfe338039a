#include "qe/classify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "qe/error.hpp"

namespace qe {

bool ShScan::any_saturated() const {
  return std::any_of(hits.begin(), hits.end(), [](const ShHit& h) { return h.saturated; });
}

ShScan scan_sh(const RingContext& ctx, const IntPoly& h, std::uint64_t p_max, unsigned k_max) {
  if (h.is_zero()) throw PreconditionError("scan_sh: h must be nonzero");
  const auto primes = primes_up_to(p_max);

  auto probe = [&](std::uint64_t p) -> std::optional<ShHit> {
    const ResidueClass value = poly_eval_mod(h, ctx.tau(), p, k_max);
    const unsigned depth = value.valuation();
    if (depth == 0) return std::nullopt;
    return ShHit{p, depth, depth == k_max, ctx.tau().certifies_root(h, p)};
  };

  // Primes are dealt round-robin to a fixed pool; results land in prime order.
  std::vector<std::optional<ShHit>> found(primes.size());
  const std::size_t workers =
      std::min<std::size_t>(primes.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < primes.size(); i += workers) found[i] = probe(primes[i]);
    }));
  for (auto& f : pool) f.get();

  ShScan scan{h, p_max, k_max, {}};
  for (auto& hit : found)
    if (hit) scan.hits.push_back(*hit);
  return scan;
}

namespace {

RingElement over(const IntPoly& h, const mpz_class& n) { return RingElement::normalize(h, n); }

std::optional<NonUfdWitness> prime_power_chain(const RingContext& ctx, const ShScan& scan, unsigned depth) {
  for (const auto& hit : scan.hits) {
    if (!hit.certified_root) continue;
    NonUfdWitness w{scan.h, {}, {}};
    mpz_class n = 1;
    for (unsigned j = 1; j <= depth; ++j) {
      n *= static_cast<unsigned long>(hit.prime);
      w.primes.push_back(hit.prime);
      w.chain.push_back(over(scan.h, n));
    }
    if (verify_witness(ctx, w)) return w;
  }
  return std::nullopt;
}

std::optional<NonUfdWitness> distinct_prime_chain(const RingContext& ctx, const ShScan& scan, unsigned depth) {
  if (scan.hits.size() < depth) return std::nullopt;
  NonUfdWitness w{scan.h, {}, {}};
  mpz_class n = 1;
  for (unsigned j = 0; j < depth; ++j) {
    n *= static_cast<unsigned long>(scan.hits[j].prime);
    w.primes.push_back(scan.hits[j].prime);
    w.chain.push_back(over(scan.h, n));
  }
  if (verify_witness(ctx, w)) return w;
  return std::nullopt;
}

}  // namespace

std::optional<NonUfdWitness> non_ufd_witness(const RingContext& ctx, const IntPoly& h, unsigned depth,
                                             WitnessBounds bounds, WitnessStrategy strategy) {
  if (depth < 2) throw PreconditionError("non_ufd_witness: depth must be at least 2");
  const ShScan scan = scan_sh(ctx, h, bounds.p_max, bounds.k_max);
  if (strategy != WitnessStrategy::distinct_primes)
    if (auto w = prime_power_chain(ctx, scan, depth)) return w;
  if (strategy != WitnessStrategy::prime_power) return distinct_prime_chain(ctx, scan, depth);
  return std::nullopt;
}

bool verify_witness(const RingContext& ctx, const NonUfdWitness& w) {
  if (w.h.is_zero()) return false;
  RingElement prev = RingElement::normalize(w.h, 1);
  for (const auto& e : w.chain) {
    if (e.is_zero() || !ctx.is_member(e)) return false;
    if (!divides(ctx, e, prev) || divides(ctx, prev, e)) return false;
    prev = e;
  }
  return true;
}

TauSpec make_log_generic(std::uint64_t seed) { return TauSpec::log_generic(seed); }

TauSpec make_zero_on(const std::set<std::uint64_t>& primes, const TauSpec& base) {
  std::map<std::uint64_t, TauSpec> overrides;
  for (std::uint64_t p : primes) overrides.emplace(p, TauSpec::zero());
  return TauSpec::piecewise(std::move(overrides), base);
}

TauSpec make_zero_on(std::function<bool(const mpz_class&)> pred, const TauSpec& base) {
  return TauSpec::zero_on(std::move(pred), base);
}

}  // namespace qe
