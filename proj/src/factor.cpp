#include "addcyc/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

namespace addcyc {

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly int_divide_monic(IntPoly f, const IntPoly& g) {
  std::size_t dg = g.size() - 1;
  IntPoly q(f.size() - dg, 0);
  for (std::size_t k = f.size(); k-- > dg;) {
    std::int64_t c = f[k];
    q[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) f[k - dg + j] -= c * g[j];
  }
  return q;
}

const IntPoly& cyclotomic(std::size_t m) {
  static std::map<std::size_t, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::vector<std::size_t> todo;
  for (std::size_t d = 1; d <= m; ++d)
    if (m % d == 0 && !cache.count(d)) todo.push_back(d);
  for (std::size_t d : todo) {
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    for (std::size_t e = 1; e < d; ++e)
      if (d % e == 0) f = int_divide_monic(f, cache.at(e));
    cache[d] = f;
  }
  return cache.at(m);
}

std::size_t multiplicative_order(std::uint32_t p, std::size_t m) {
  if (m == 1) return 1;
  std::size_t k = 1;
  u64 x = p % m;
  while (x != 1) {
    x = (x * p) % m;
    ++k;
  }
  return k;
}

Poly random_below(const RingSpec& ring, std::size_t deg, std::mt19937_64& rng) {
  std::vector<u64> v(deg);
  std::uniform_int_distribution<u64> dist(0, ring.modulus() - 1);
  for (u64& c : v) c = dist(rng);
  return Poly(ring, std::move(v));
}

// Equal-degree splitting of a squarefree f over Z_p whose irreducible
// factors all have degree d.
void split_equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<std::size_t>(f.degree()) == d) {
    out.push_back(f);
    return;
  }
  const RingSpec& ring = f.ring();
  const std::uint32_t p = ring.prime();
  for (;;) {
    Poly a = random_below(ring, static_cast<std::size_t>(f.degree()), rng);
    if (a.degree() < 1) continue;
    Poly b(ring);
    if (p == 2) {
      Poly t = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = divmod(t * t, f).remainder;
        b = b + t;
      }
    } else {
      Poly frob = a;
      Poly norm = a;
      for (std::size_t i = 1; i < d; ++i) {
        frob = powmod(frob, p, f);
        norm = divmod(norm * frob, f).remainder;
      }
      b = powmod(norm, (p - 1) / 2, f) - Poly::one(ring);
    }
    Poly g = gcd_over_field(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_equal_degree(g, d, rng, out);
      split_equal_degree(exact_quotient(f, g), d, rng, out);
      return;
    }
  }
}

// One quadratic lifting step: f = g h, s g + t h = 1 both hold to some
// precision m and hold to precision m^2 afterwards (computed in the target ring).
void hensel_step(const Poly& f, Poly& g, Poly& h, Poly& s, Poly& t) {
  Poly e = f - g * h;
  DivMod qr = divmod(s * e, h);
  Poly g2 = g + t * e + qr.quotient * g;
  Poly h2 = h + qr.remainder;
  Poly b = s * g2 + t * h2 - Poly::one(f.ring());
  DivMod cd = divmod(s * b, h2);
  s = s - cd.remainder;
  t = t - t * b - cd.quotient * g2;
  g = g2;
  h = h2;
}

}  // namespace

std::vector<Poly> factor_xn_minus_1(std::size_t n, std::uint32_t p) {
  RingSpec field(p, 1);
  if (n == 0) throw std::invalid_argument("factor: n must be positive");
  QuotientCtx check(field, n);
  std::mt19937_64 rng(0xC0DE);
  std::vector<Poly> out;
  for (std::size_t m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    const IntPoly& phi = cyclotomic(m);
    std::vector<u64> c;
    for (std::int64_t x : phi) c.push_back(field.reduce(x));
    split_equal_degree(Poly(field, c), multiplicative_order(p, m), rng, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LiftedFactorization hensel_lift(const std::vector<Poly>& factors, const RingSpec& target) {
  if (factors.empty()) throw std::invalid_argument("hensel_lift: empty factor list");
  const RingSpec field(target.prime(), 1);
  std::size_t n = 0;
  for (const Poly& f : factors) {
    if (!(f.ring() == field) || !f.is_monic())
      throw std::invalid_argument("hensel_lift: factors must be monic over " + field.name());
    n += static_cast<std::size_t>(f.degree());
  }
  LiftedFactorization lf;
  lf.n = n;
  lf.ring = target;
  lf.base = factors;
  Poly rest = Poly::x_pow_minus_one(target, n);
  std::uint32_t rounds = 0;
  while ((1u << rounds) < target.exponent()) ++rounds;
  for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
    Poly h0 = Poly::one(field);
    for (std::size_t k = j + 1; k < factors.size(); ++k) h0 = h0 * factors[k];
    ExtGcd eg = ext_gcd_over_field(factors[j], h0);
    if (eg.gcd.degree() != 0)
      throw std::domain_error("non-squarefree case excluded: factors are not coprime");
    Poly g = factors[j].embedded_in(target), h = h0.embedded_in(target);
    Poly s = eg.s.embedded_in(target), t = eg.t.embedded_in(target);
    for (std::uint32_t i = 0; i < rounds; ++i) hensel_step(rest, g, h, s, t);
    lf.lifts.push_back(g);
    rest = h;
  }
  lf.lifts.push_back(rest);
  Poly product = Poly::one(target);
  for (std::size_t j = 0; j < lf.lifts.size(); ++j) {
    if (!lf.lifts[j].is_monic() || !(lf.lifts[j].reduced_to(field) == factors[j]))
      throw std::logic_error("hensel_lift: lift does not reduce to its factor");
    product = product * lf.lifts[j];
  }
  if (!(product == Poly::x_pow_minus_one(target, n)))
    throw std::logic_error("hensel_lift: lifted product differs from x^n - 1");
  return lf;
}

const LiftedFactorization& lifted_factorization(std::size_t n, const RingSpec& ring) {
  using Key = std::tuple<std::size_t, std::uint32_t, std::uint32_t>;
  static std::map<Key, std::unique_ptr<LiftedFactorization>> cache;
  static std::mutex mu;
  Key key{n, ring.prime(), ring.exponent()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto lf = std::make_unique<LiftedFactorization>();
  if (n == 0) {
    lf->ring = ring;
  } else {
    *lf = hensel_lift(factor_xn_minus_1(n, ring.prime()), ring);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(lf));
  return *it->second;
}

ChainEnumerator::ChainEnumerator(const QuotientCtx& ctx)
    : ctx_(ctx), lf_(&lifted_factorization(ctx.length(), ctx.ring())), k_(lf_->lifts.size(), 0) {}

std::optional<std::vector<Poly>> ChainEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Poly> chain = chain_from_exponents(ctx_, k_);
  std::size_t j = 0;
  const std::uint32_t a = ctx_.ring().exponent();
  while (j < k_.size() && k_[j] == a) k_[j++] = 0;
  if (j == k_.size())
    done_ = true;
  else
    ++k_[j];
  return chain;
}

u64 ChainEnumerator::count() const {
  u64 c = 1;
  const u64 base = ctx_.ring().exponent() + 1;
  for (std::size_t j = 0; j < lf_->lifts.size(); ++j) {
    if (c > ~u64(0) / base) return ~u64(0);
    c *= base;
  }
  return c;
}

std::vector<Poly> chain_from_exponents(const QuotientCtx& ctx,
                                       const std::vector<std::uint32_t>& exponents) {
  const RingSpec& ring = ctx.ring();
  const std::uint32_t a = ring.exponent();
  if (ctx.length() == 0) return std::vector<Poly>(a, Poly(ring));
  const LiftedFactorization& lf = lifted_factorization(ctx.length(), ring);
  if (exponents.size() != lf.lifts.size())
    throw std::invalid_argument("chain: exponent count does not match the factor count");
  std::vector<Poly> chain;
  for (std::uint32_t i = 0; i < a; ++i) {
    Poly f = Poly::one(ring);
    for (std::size_t j = 0; j < exponents.size(); ++j)
      if (exponents[j] > i) f = f * lf.lifts[j];
    chain.push_back(f);
  }
  return chain;
}

std::vector<std::uint32_t> exponents_of_chain(const QuotientCtx& ctx, const std::vector<Poly>& chain) {
  const RingSpec& ring = ctx.ring();
  const std::uint32_t a = ring.exponent();
  if (chain.size() != a)
    throw std::invalid_argument("chain violation: expected " + std::to_string(a) + " entries, got " +
                                std::to_string(chain.size()));
  for (const Poly& f : chain)
    if (!(f.ring() == ring))
      throw std::invalid_argument("ring mismatch: chain entry over " + f.ring().name() +
                                  ", expected " + ring.name());
  if (ctx.length() == 0) {
    for (const Poly& f : chain)
      if (!f.is_zero()) throw std::invalid_argument("chain violation: block of length 0");
    return {};
  }
  const LiftedFactorization& lf = lifted_factorization(ctx.length(), ring);
  Poly prev = ctx.modulus();
  for (std::uint32_t i = 0; i < a; ++i) {
    const Poly& f = chain[i];
    if (!f.is_monic())
      throw std::invalid_argument("chain violation: entry " + std::to_string(i) + " (" + f.pretty() +
                                  ") is not monic");
    if (!divides(f, prev))
      throw std::invalid_argument("chain violation: entry " + std::to_string(i) + " (" + f.pretty() +
                                  ") does not divide " + prev.pretty());
    prev = f;
  }
  std::vector<std::uint32_t> k(lf.lifts.size(), 0);
  for (std::size_t j = 0; j < lf.lifts.size(); ++j)
    for (std::uint32_t i = 0; i < a; ++i)
      if (divides(lf.lifts[j], chain[i])) k[j] = i + 1;
  if (chain_from_exponents(ctx, k) != chain)
    throw std::invalid_argument("chain violation: entries are not products of lifted factors");
  return k;
}

HatChain hat_chain(const QuotientCtx& ctx, const std::vector<Poly>& chain) {
  exponents_of_chain(ctx, chain);
  const RingSpec& ring = ctx.ring();
  const std::uint32_t a = ring.exponent();
  HatChain hc{{}, Poly::one(ring)};
  if (ctx.length() == 0) {
    hc.hats.assign(a + 1, Poly::one(ring));
    return hc;
  }
  hc.hats.push_back(exact_quotient(ctx.modulus(), chain[0]));
  for (std::uint32_t i = 1; i < a; ++i) hc.hats.push_back(exact_quotient(chain[i - 1], chain[i]));
  hc.hats.push_back(chain[a - 1]);
  hc.annihilator = exact_quotient(ctx.modulus(), chain[a - 1]);
  return hc;
}

}  // namespace addcyc
