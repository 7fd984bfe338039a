#pragma once

#include <map>
#include <mutex>

#include "qe/tau.hpp"

namespace qe::detail {

class TauNode {
 public:
  virtual ~TauNode() = default;

  virtual TauKind kind() const = 0;
  /// tau_p mod p^k, computed from scratch. Must be a deterministic function
  /// of (p, k) whose values are coherent across k.
  virtual mpz_class compute(const mpz_class& p, unsigned k) const = 0;
  virtual bool certifies_root(const IntPoly& h, const mpz_class& p) const = 0;

  ResidueClass query(const mpz_class& p, unsigned k) const;
  std::size_t cache_misses() const;

 private:
  struct Entry {
    unsigned precision;
    mpz_class value;
  };

  mutable std::mutex mu_;
  mutable std::map<mpz_class, Entry> cache_;
  mutable std::size_t misses_ = 0;
};

struct ConstantNode final : TauNode {
  explicit ConstantNode(mpz_class z) : value(std::move(z)) {}
  TauKind kind() const override { return TauKind::constant; }
  mpz_class compute(const mpz_class& p, unsigned k) const override;
  bool certifies_root(const IntPoly& h, const mpz_class& p) const override;

  mpz_class value;
};

struct ZeroNode final : TauNode {
  TauKind kind() const override { return TauKind::zero; }
  mpz_class compute(const mpz_class&, unsigned) const override { return 0; }
  bool certifies_root(const IntPoly& h, const mpz_class&) const override { return h.coeff(0) == 0; }
};

struct StreamNode final : TauNode {
  explicit StreamNode(std::uint64_t s) : seed(s) {}
  TauKind kind() const override { return TauKind::stream; }
  mpz_class compute(const mpz_class& p, unsigned k) const override;
  bool certifies_root(const IntPoly&, const mpz_class&) const override { return false; }

  std::uint64_t seed;
};

struct HenselNode final : TauNode {
  HenselNode(IntPoly f, TauSpec fb) : poly(std::move(f)), fallback(std::move(fb)) {}
  TauKind kind() const override { return TauKind::hensel; }
  mpz_class compute(const mpz_class& p, unsigned k) const override;
  bool certifies_root(const IntPoly& h, const mpz_class& p) const override;

  IntPoly poly;
  TauSpec fallback;
};

struct LogGenericNode final : TauNode {
  explicit LogGenericNode(std::uint64_t s) : seed(s) {}
  TauKind kind() const override { return TauKind::log_generic; }
  mpz_class compute(const mpz_class& p, unsigned k) const override;
  bool certifies_root(const IntPoly&, const mpz_class&) const override { return false; }

  std::uint64_t seed;
};

struct PiecewiseNode final : TauNode {
  PiecewiseNode(std::map<std::uint64_t, TauSpec> o, TauSpec d)
      : overrides(std::move(o)), fallback(std::move(d)) {}
  TauKind kind() const override { return TauKind::piecewise; }
  mpz_class compute(const mpz_class& p, unsigned k) const override;
  bool certifies_root(const IntPoly& h, const mpz_class& p) const override;
  const TauSpec& at(const mpz_class& p) const;

  std::map<std::uint64_t, TauSpec> overrides;
  TauSpec fallback;
};

struct ZeroOnNode final : TauNode {
  ZeroOnNode(std::function<bool(const mpz_class&)> pr, TauSpec b) : pred(std::move(pr)), base(std::move(b)) {}
  TauKind kind() const override { return TauKind::zero_on; }
  mpz_class compute(const mpz_class& p, unsigned k) const override;
  bool certifies_root(const IntPoly& h, const mpz_class& p) const override;

  std::function<bool(const mpz_class&)> pred;
  TauSpec base;
};

/// Digit i (in [0, p)) of the seeded stream at prime p.
mpz_class stream_digit(std::uint64_t seed, const mpz_class& p, unsigned i);

/// floor(ln p).
mpz_class floor_log(const mpz_class& p);

}  // namespace qe::detail
