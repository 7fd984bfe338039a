#include "qe/padic.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "qe/error.hpp"

namespace qe {

mpz_class prime_power(const mpz_class& p, unsigned k) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), k);
  return out;
}

ResidueClass::ResidueClass(mpz_class prime, unsigned precision, const mpz_class& value)
    : prime_(std::move(prime)), precision_(precision) {
  const mpz_class m = prime_power(prime_, precision);
  mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
}

mpz_class ResidueClass::modulus() const { return prime_power(prime_, precision_); }

unsigned ResidueClass::valuation() const {
  if (value_ == 0) return precision_;
  return qe::valuation(value_, prime_);
}

ResidueClass reduce(const ResidueClass& r, unsigned j) {
  if (j > r.precision()) throw std::out_of_range("reduce: target precision exceeds source precision");
  return ResidueClass(r.prime(), j, r.value());
}

unsigned valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  mpz_class rest = n;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(const mpz_class& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

namespace {

// Brent's variant of Pollard rho; n odd, composite.
mpz_class rho_factor(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    auto f = [&](const mpz_class& v) {
      mpz_class w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      for (unsigned long k = 0; k < r && g == 1; k += 128) {
        ys = y;
        for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
          y = f(y);
          q = q * ::abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        const mpz_class d = ::abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  // Rho cannot separate the equal factors of a perfect power.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        for (unsigned long i = 0; i < k; ++i) split(root, acc);
        return;
      }
    }
  }
  const mpz_class d = rho_factor(n);
  split(d, acc);
  split(n / d, acc);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
  mpz_class rest = ::abs(n);
  if (rest == 0) throw std::invalid_argument("factorize zero");
  std::map<mpz_class, unsigned> acc;
  for (unsigned long p = 2; p < 1000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) acc[mpz_class(p)] = e;
  }
  split(rest, acc);
  return {acc.begin(), acc.end()};
}

mpz_class eval_mod(const IntPoly& h, const mpz_class& t, const mpz_class& m) {
  mpz_class acc = 0;
  const auto c = h.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * t + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

ResidueClass hensel_lift(const IntPoly& f, const mpz_class& p, const mpz_class& root, unsigned k) {
  const mpz_class& pm = p;
  if (eval_mod(f, root, pm) != 0) throw PreconditionError("hensel_lift: root is not a root of f mod p");
  const mpz_class slope = eval_mod(f.derivative(), root, pm);
  if (slope == 0) throw PreconditionError("hensel_lift: root is not simple mod p (f' vanishes)");
  if (k == 0) return ResidueClass(p, 0, 0);

  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), pm.get_mpz_t());
  // Linear lifting one digit at a time: v <- v - f(v)/f'(root) mod p^(j+1).
  mpz_class v = root;
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  mpz_class mod = pm;
  for (unsigned j = 1; j < k; ++j) {
    mod *= pm;
    const mpz_class fv = eval_mod(f, v, mod);
    v -= fv * inv;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  }
  return ResidueClass(p, k, v);
}

namespace {

// Dense polynomials over Z/pZ, little-endian, no trailing zeros.
using Fp = std::vector<mpz_class>;

struct FpRing {
  mpz_class p;

  void trim(Fp& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  mpz_class red(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  mpz_class inv(const mpz_class& v) const {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Fp mul(const Fp& a, const Fp& b) const {
    if (a.empty() || b.empty()) return {};
    Fp out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    for (auto& c : out) c = red(c);
    trim(out);
    return out;
  }
  // a mod b, b nonzero.
  Fp rem(Fp a, const Fp& b) const {
    const mpz_class lead = inv(b.back());
    while (a.size() >= b.size()) {
      const mpz_class c = red(a.back() * lead);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = red(a[shift + i] - c * b[i]);
      trim(a);
    }
    return a;
  }
  // Exact quotient a / b, b nonzero.
  Fp quo(Fp a, const Fp& b) const {
    const mpz_class lead = inv(b.back());
    Fp q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
      const mpz_class c = red(a.back() * lead);
      const std::size_t shift = a.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = red(a[shift + i] - c * b[i]);
      trim(a);
    }
    trim(q);
    return q;
  }
  Fp monic(Fp a) const {
    const mpz_class lead = inv(a.back());
    for (auto& c : a) c = red(c * lead);
    return a;
  }
  Fp gcd(Fp a, Fp b) const {
    while (!b.empty()) {
      Fp r = rem(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.empty() ? a : monic(std::move(a));
  }
  // base^e mod m.
  Fp powmod(Fp base, mpz_class e, const Fp& m) const {
    Fp acc{1};
    acc = rem(acc, m);
    base = rem(std::move(base), m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, base), m);
      base = rem(mul(base, base), m);
      e >>= 1;
    }
    return acc;
  }
  Fp sub_one(Fp a) const {
    if (a.empty()) a.push_back(0);
    a[0] = red(a[0] - 1);
    trim(a);
    return a;
  }

  // Roots of a monic squarefree g that splits into distinct linear factors.
  void split_roots(const Fp& g, std::mt19937_64& rng, std::vector<mpz_class>& out) const {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
      out.push_back(red(-g[0]));
      return;
    }
    gmp_randclass draw(gmp_randinit_default);
    draw.seed(static_cast<unsigned long>(rng()));
    const mpz_class half = (p - 1) / 2;
    for (;;) {
      const Fp shifted{draw.get_z_range(p), 1};
      const Fp d = gcd(g, sub_one(powmod(shifted, half, g)));
      if (d.size() > 1 && d.size() < g.size()) {
        split_roots(d, rng, out);
        split_roots(quo(g, d), rng, out);
        return;
      }
    }
  }
};

}  // namespace

std::vector<mpz_class> simple_roots_mod(const IntPoly& f, const mpz_class& p) {
  const FpRing ring{p};
  Fp fp;
  for (const auto& c : f.coeffs()) fp.push_back(ring.red(c));
  ring.trim(fp);
  std::vector<mpz_class> roots;
  if (fp.size() > 1) {
    fp = ring.monic(std::move(fp));
    // The distinct roots of f are those of g = gcd(f, x^p - x).
    Fp xp_minus_x = ring.powmod(Fp{0, 1}, p, fp);
    if (xp_minus_x.size() < 2) xp_minus_x.resize(2, 0);
    xp_minus_x[1] = ring.red(xp_minus_x[1] - 1);
    ring.trim(xp_minus_x);
    Fp g = ring.gcd(fp, xp_minus_x);
    if (g[0] == 0) {
      roots.emplace_back(0);
      g = ring.quo(g, Fp{0, 1});
    }
    if (p == 2) {
      if (g.size() == 2) roots.emplace_back(1);
    } else {
      std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
      ring.split_roots(g, rng, roots);
    }
  }
  const IntPoly df = f.derivative();
  std::vector<mpz_class> out;
  for (const auto& t : roots)
    if (eval_mod(df, t, p) != 0) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

Congruence crt_combine(std::span<const Congruence> parts) {
  Congruence acc{1, 0};
  for (const auto& part : parts) {
    if (part.modulus <= 0) throw PreconditionError("crt_combine: moduli must be positive");
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc.modulus.get_mpz_t(),
               part.modulus.get_mpz_t());
    if (g != 1) throw PreconditionError("crt_combine: moduli are not pairwise coprime");
    // x = acc.residue + acc.modulus * s * (part.residue - acc.residue)
    const mpz_class product = acc.modulus * part.modulus;
    mpz_class x = acc.residue + acc.modulus * s * (part.residue - acc.residue);
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), product.get_mpz_t());
    acc = {product, x};
  }
  return acc;
}

}  // namespace qe
